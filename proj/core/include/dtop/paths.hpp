#pragma once

#include <string>
#include <vector>

#include "dtop/finite_space.hpp"

namespace dtop {

/// COTS-distance value; explicitly infinite when the points share no
/// connected piece of the space.
class Distance {
public:
    static Distance finite(int v) {
        ensure(v >= 0, "negative distance");
        return Distance(true, v);
    }
    static Distance unreachable() { return Distance(false, 0); }

    bool is_finite() const { return finite_; }
    bool is_unreachable() const { return !finite_; }
    int value() const {
        ensure(finite_, "distance is infinite");
        return v_;
    }
    std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

    bool operator==(const Distance&) const = default;
    /// Total order with every finite value below infinity.
    bool operator<(const Distance& o) const {
        if (finite_ != o.finite_) return finite_;
        return finite_ && v_ < o.v_;
    }
    bool operator<=(const Distance& o) const { return *this == o || *this < o; }

private:
    Distance(bool f, int v) : finite_(f), v_(v) {}
    bool finite_;
    int v_;
};

/// Point sequences are fences: consecutive entries comparable. A sequence is
/// a COTS-path when each consecutive pair is comparable (repeats allowed),
/// and a COTS-arc when additionally all points are distinct and no
/// non-consecutive pair is comparable (the induced graph is a path).
bool is_cots_path(const Subspace& s, const std::vector<Point>& seq);
bool is_cots_arc(const Subspace& s, const std::vector<Point>& seq);

/// Joins two COTS-paths sharing an endpoint: last(p1) must equal first(p2).
std::vector<Point> concat(const Subspace& s, const std::vector<Point>& p1,
                          const std::vector<Point>& p2);

/// Loop removal: repeatedly find the lowest index i with a later equal or
/// comparable point, splice against the highest such index, until the
/// sequence is a COTS-arc. Endpoints are preserved.
std::vector<Point> extract_arc(const Subspace& s, const std::vector<Point>& path);

/// COTS-distance: one less than the size of a shortest COTS-arc joining x
/// and y, computed as shortest-fence length in the comparability graph.
Distance distance(const Subspace& s, Point x, Point y);

/// max_{a in A} d(x, a).
Distance set_distance(const Subspace& s, Point x, const std::vector<Point>& a);
/// max over all pairs; symmetric.
Distance set_distance(const Subspace& s, const std::vector<Point>& a,
                      const std::vector<Point>& b);

std::vector<Point> sphere(const Subspace& s, Point x, int n);
std::vector<Point> disk(const Subspace& s, Point x, int n);
Distance diameter(const Subspace& s);

/// All shortest COTS-arcs from x to y, each as a point sequence starting at
/// x. Lexicographically ordered; empty when x and y are disconnected.
/// Throws std::overflow_error past 100000 results.
std::vector<std::vector<Point>> geodesics(const Subspace& s, Point x, Point y);

bool is_cots_path(const FiniteSpace& s, const std::vector<Point>& seq);
bool is_cots_arc(const FiniteSpace& s, const std::vector<Point>& seq);
std::vector<Point> extract_arc(const FiniteSpace& s, const std::vector<Point>& path);
Distance distance(const FiniteSpace& s, Point x, Point y);
Distance set_distance(const FiniteSpace& s, Point x, const std::vector<Point>& a);
Distance set_distance(const FiniteSpace& s, const std::vector<Point>& a,
                      const std::vector<Point>& b);
std::vector<Point> sphere(const FiniteSpace& s, Point x, int n);
std::vector<Point> disk(const FiniteSpace& s, Point x, int n);
Distance diameter(const FiniteSpace& s);
std::vector<std::vector<Point>> geodesics(const FiniteSpace& s, Point x, Point y);

}  // namespace dtop
