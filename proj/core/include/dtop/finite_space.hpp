#pragma once

#include <cstdint>
#include <vector>

#include "dtop/error.hpp"

namespace dtop {

/// Dense point id within a FiniteSpace.
using Point = int;

/// A finite T0 topological space stored as an explicit poset.
///
/// The convention throughout: x <= y means x lies in the minimal open
/// neighborhood U_y of y. Down-sets are open sets, so open points sit low
/// in the order and closed points sit high.
class FiniteSpace {
public:
    static constexpr int max_points = 4096;

    /// leq_matrix is row-major n*n with entry [a*n+b] nonzero iff a <= b.
    /// Rejects relations that are not reflexive, antisymmetric and
    /// transitive (throws std::invalid_argument).
    FiniteSpace(int n, std::vector<std::uint8_t> leq_matrix);

    int size() const { return n_; }

    bool leq(Point a, Point b) const {
        check_point(a);
        check_point(b);
        return leq_[static_cast<std::size_t>(a) * n_ + b] != 0;
    }
    bool comparable(Point a, Point b) const { return leq(a, b) || leq(b, a); }

    /// A(x): all points comparable to x, except x itself. Sorted.
    const std::vector<Point>& adjacency(Point x) const;

    /// x^down = U_x = {y | y <= x}. Sorted. Always contains x.
    std::vector<Point> down_set(Point x) const;
    /// x^up = F_x = {y | y >= x}. Sorted. Always contains x.
    std::vector<Point> up_set(Point x) const;

    /// Same points, reversed order (open and closed swapped).
    FiniteSpace dual() const;

    const std::vector<std::uint8_t>& matrix() const { return leq_; }

    bool operator==(const FiniteSpace& o) const {
        return n_ == o.n_ && leq_ == o.leq_;
    }

private:
    int n_;
    std::vector<std::uint8_t> leq_;
    std::vector<std::vector<Point>> adj_;

    void check_point(Point x) const {
        if (x < 0 || x >= n_) throw std::invalid_argument("point id out of range");
    }
};

/// Product space on pairs (a, b), componentwise order. Pair (a, b) gets
/// id a * second.size() + b.
FiniteSpace product(const FiniteSpace& first, const FiniteSpace& second);

/// Induced subspace view. Refers to its parent; never copies the parent.
class Subspace {
public:
    /// members are parent ids; duplicates rejected, order normalized to sorted.
    Subspace(const FiniteSpace& parent, std::vector<Point> members);

    static Subspace whole(const FiniteSpace& parent);

    const FiniteSpace& parent_space() const { return *parent_; }
    int size() const { return static_cast<int>(members_.size()); }

    Point point(int local) const { return members_[static_cast<std::size_t>(local)]; }
    /// Parent id -> local index, or -1 when absent.
    int local(Point p) const;
    bool contains(Point p) const { return local(p) >= 0; }

    const std::vector<Point>& members() const { return members_; }

    bool leq_local(int a, int b) const { return parent_->leq(point(a), point(b)); }
    /// Local indices of members comparable to local point x.
    const std::vector<int>& adjacency_local(int x) const { return adj_[static_cast<std::size_t>(x)]; }

    /// Standalone copy: member k of this subspace becomes point k.
    FiniteSpace as_space() const;

private:
    const FiniteSpace* parent_;
    std::vector<Point> members_;
    std::vector<int> local_of_;
    std::vector<std::vector<int>> adj_;
};

/// Connectivity of the comparability graph; for finite spaces this agrees
/// with topological and path connectivity.
bool is_connected(const Subspace& s);
bool is_connected(const FiniteSpace& s);

/// Partition into connected components. Components are listed by their
/// smallest member, each sorted; ids are parent ids.
std::vector<std::vector<Point>> components(const Subspace& s);
std::vector<std::vector<Point>> components(const FiniteSpace& s);

/// Points x whose punctured down-set has a greatest element or whose
/// punctured up-set has a least element. Sorted parent ids.
std::vector<Point> beat_points(const Subspace& s);
std::vector<Point> beat_points(const FiniteSpace& s);

/// Iterated beat-point removal. Each pass removes the first beat point in
/// ascending id order; the result is the member set of the core.
std::vector<Point> core_members(const Subspace& s);
/// Same, but each pass removes the candidate appearing earliest in
/// `preference` (a permutation of parent ids). Used to check that core
/// size does not depend on removal order.
std::vector<Point> core_members(const Subspace& s, const std::vector<Point>& preference);

FiniteSpace core(const FiniteSpace& s);

bool is_contractible(const Subspace& s);
bool is_contractible(const FiniteSpace& s);

/// x is weak when its punctured down-set or punctured up-set is
/// contractible (a beat point is the special case where one of them has a
/// single extremal element).
bool is_weak_point(const Subspace& s, Point x);
bool is_weak_point(const FiniteSpace& s, Point x);

/// height[i] = length in edges of the longest chain descending from i.
std::vector<int> heights(const FiniteSpace& s);

}  // namespace dtop
