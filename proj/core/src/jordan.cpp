#include "dtop/jordan.hpp"

#include <algorithm>
#include <sstream>

namespace dtop {

namespace {

std::vector<Point> to_ids(const DigitalPlane& plane, const std::vector<Coord>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Coord& c : pts) out.push_back(plane.id(c));
    return out;
}

std::vector<Point> unique_sorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Induced comparability degrees within the set.
std::vector<int> induced_degrees(const DigitalPlane& plane, const std::vector<Point>& set) {
    std::vector<int> deg(set.size(), 0);
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (plane.space().comparable(set[a], set[b])) {
                ++deg[a];
                ++deg[b];
            }
    return deg;
}

bool induced_is_path(const DigitalPlane& plane, const std::vector<Point>& set) {
    if (set.empty()) return false;
    if (set.size() == 1) return true;
    int edges = 0, deg1 = 0;
    const std::vector<int> deg = induced_degrees(plane, set);
    for (int d : deg) {
        if (d > 2) return false;
        if (d == 1) ++deg1;
        edges += d;
    }
    edges /= 2;
    if (edges != static_cast<int>(set.size()) - 1 || deg1 != 2) return false;
    return is_connected(Subspace(plane.space(), set));
}

long long twice_signed_area(const std::vector<Coord>& poly) {
    long long s = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Coord& a = poly[k];
        const Coord& b = poly[(k + 1) % poly.size()];
        s += static_cast<long long>(a.first) * b.second -
             static_cast<long long>(b.first) * a.second;
    }
    return s;
}

std::vector<Coord> walk_cycle(const DigitalPlane& plane, const std::vector<Point>& set) {
    // neighbors within the set; every degree is exactly 2 here
    std::vector<std::vector<int>> nbr(set.size());
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (plane.space().comparable(set[a], set[b])) {
                nbr[a].push_back(static_cast<int>(b));
                nbr[b].push_back(static_cast<int>(a));
            }
    std::vector<Coord> out;
    out.reserve(set.size());
    int prev = -1, cur = 0;
    for (std::size_t k = 0; k < set.size(); ++k) {
        out.push_back(plane.coord(set[static_cast<std::size_t>(cur)]));
        const int a = nbr[static_cast<std::size_t>(cur)][0];
        const int b = nbr[static_cast<std::size_t>(cur)][1];
        const int next = (a == prev) ? b : a;
        prev = cur;
        cur = next;
    }
    ensure(cur == 0, "cycle walk did not close");
    return out;
}

std::vector<Coord> canonical_cycle(std::vector<Coord> cycle) {
    const std::size_t n = cycle.size();
    const std::size_t at = static_cast<std::size_t>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(at), cycle.end());
    if (cycle[n - 1] < cycle[1]) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

}  // namespace

bool is_jordan_curve(const DigitalPlane& plane, const std::vector<Point>& pts) {
    const std::vector<Point> set = unique_sorted(pts);
    if (set.size() != pts.size()) return false;
    if (set.size() < 4) return false;
    for (Point p : set)
        if (p < 0 || p >= plane.space().size()) return false;
    for (int d : induced_degrees(plane, set))
        if (d != 2) return false;
    return is_connected(Subspace(plane.space(), set));
}

bool is_jordan_curve(const DigitalPlane& plane, const std::vector<Coord>& pts) {
    for (const Coord& c : pts)
        if (!plane.in_bounds(c.first, c.second)) return false;
    return is_jordan_curve(plane, to_ids(plane, pts));
}

bool is_jordan_curve_by_deletion(const DigitalPlane& plane, const std::vector<Point>& pts) {
    const std::vector<Point> set = unique_sorted(pts);
    if (set.size() != pts.size()) return false;
    if (set.size() < 4) return false;
    for (Point p : set)
        if (p < 0 || p >= plane.space().size()) return false;
    for (std::size_t k = 0; k < set.size(); ++k) {
        std::vector<Point> rest;
        rest.reserve(set.size() - 1);
        for (std::size_t m = 0; m < set.size(); ++m)
            if (m != k) rest.push_back(set[m]);
        if (!induced_is_path(plane, rest)) return false;
    }
    return true;
}

JordanCurve::JordanCurve(PlanePtr plane, const std::vector<Coord>& points)
    : plane_(std::move(plane)) {
    require(plane_ != nullptr, "curve needs a plane");
    for (const Coord& c : points)
        require(plane_->in_bounds(c.first, c.second), "curve point out of bounds");
    std::vector<Point> set = unique_sorted(to_ids(*plane_, points));
    require(set.size() == points.size(), "curve points contain duplicates");
    require(is_jordan_curve(*plane_, set), "point set is not a Jordan curve");
    pts_ = canonical_cycle(walk_cycle(*plane_, set));
}

std::vector<Point> JordanCurve::ids() const { return to_ids(*plane_, pts_); }

bool JordanCurve::contains(Coord c) const {
    return std::find(pts_.begin(), pts_.end(), c) != pts_.end();
}

std::vector<Coord> JordanCurve::clockwise() const {
    std::vector<Coord> seq = pts_;
    if (twice_signed_area(seq) > 0) {
        std::reverse(seq.begin() + 1, seq.end());
    }
    ensure(twice_signed_area(seq) < 0, "curve polygon has nonnegative area both ways");
    return seq;
}

std::string JordanCurve::key() const {
    std::ostringstream os;
    for (const Coord& c : pts_) os << c.first << ',' << c.second << ';';
    return os.str();
}

std::vector<Coord> cyclic_order(const JordanCurve& curve) { return curve.clockwise(); }

CurveRegions regions(const JordanCurve& curve) {
    const DigitalPlane& plane = *curve.plane();
    std::vector<char> on_curve(static_cast<std::size_t>(plane.space().size()), 0);
    for (Point p : curve.ids()) on_curve[static_cast<std::size_t>(p)] = 1;
    std::vector<Point> rest;
    for (Point p = 0; p < plane.space().size(); ++p)
        if (!on_curve[static_cast<std::size_t>(p)]) rest.push_back(p);

    CurveRegions out;
    for (const std::vector<Point>& comp : components(Subspace(plane.space(), rest))) {
        const bool touches_border = std::any_of(comp.begin(), comp.end(),
                                                [&](Point p) { return plane.on_border(p); });
        auto& side = touches_border ? out.exterior : out.interior;
        side.insert(side.end(), comp.begin(), comp.end());
    }
    std::sort(out.interior.begin(), out.interior.end());
    std::sort(out.exterior.begin(), out.exterior.end());
    return out;
}

std::vector<Point> interior(const JordanCurve& curve) { return regions(curve).interior; }

JordanCurve minimal_curve(PlanePtr plane, Coord p) {
    require(plane != nullptr, "minimal curve needs a plane");
    require(plane->in_bounds(p.first, p.second), "center out of bounds");
    std::vector<Coord> ring;
    for (Point q : plane->space().adjacency(plane->id(p)))
        ring.push_back(plane->coord(q));
    require(is_jordan_curve(*plane, ring), "adjacency set is not a Jordan curve");
    JordanCurve curve(plane, ring);
    const std::vector<Point> inside = interior(curve);
    ensure(inside == std::vector<Point>{plane->id(p)},
           "adjacency-set curve does not enclose exactly its center");
    return curve;
}

bool is_minimal(const JordanCurve& curve) { return interior(curve).size() == 1; }

bool LemmaReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const LemmaCheck& c) { return !c.applicable || c.passed; });
}

namespace {

int count_components(const DigitalPlane& plane, const std::vector<Point>& set) {
    if (set.empty()) return 0;
    return static_cast<int>(components(Subspace(plane.space(), set)).size());
}

std::vector<Point> adjacency_on_curve(const DigitalPlane& plane, Point q,
                                      const std::vector<Point>& curve_ids) {
    std::vector<Point> out;
    for (Point a : plane.space().adjacency(q))
        if (std::binary_search(curve_ids.begin(), curve_ids.end(), a)) out.push_back(a);
    return out;
}

}  // namespace

LemmaReport lemma_checks(const JordanCurve& curve) {
    const DigitalPlane& plane = *curve.plane();
    const CurveRegions reg = regions(curve);
    std::vector<Point> curve_ids = curve.ids();
    std::sort(curve_ids.begin(), curve_ids.end());
    const int n = curve.size();

    LemmaReport report;
    auto add = [&](const std::string& name, bool applicable, bool passed,
                   const std::string& detail) {
        report.checks.push_back({name, applicable, passed, detail});
    };

    add("even-size", true, n % 2 == 0, "curve has " + std::to_string(n) + " points");

    {
        const std::size_t total = reg.interior.size() + reg.exterior.size() + curve_ids.size();
        add("region-partition", true,
            total == static_cast<std::size_t>(plane.space().size()),
            "interior " + std::to_string(reg.interior.size()) + ", exterior " +
                std::to_string(reg.exterior.size()));
    }

    {
        bool meets_border = std::any_of(curve_ids.begin(), curve_ids.end(),
                                        [&](Point p) { return plane.on_border(p); });
        bool ok = true;
        if (!meets_border) {
            std::vector<Point> rest;
            for (Point p = 0; p < plane.space().size(); ++p)
                if (!std::binary_search(curve_ids.begin(), curve_ids.end(), p))
                    rest.push_back(p);
            ok = count_components(plane, rest) == 2;
        }
        add("two-complement-components", !meets_border, ok,
            meets_border ? "curve meets the border" : "");
    }

    const bool non_minimal = reg.interior.size() >= 2;
    {
        bool has_pure = false, has_mixed = false;
        for (Point p : reg.interior) {
            if (plane.pure(p)) has_pure = true;
            else has_mixed = true;
        }
        add("interior-pure-point", non_minimal, !non_minimal || has_pure, "");
        add("interior-mixed-point", non_minimal, !non_minimal || has_mixed, "");
    }

    {
        // components of A(p) within J are odd with pure endpoints, for every
        // pure interior point p
        bool ok = true;
        std::string detail;
        if (non_minimal) {
            for (Point p : reg.interior) {
                if (!plane.pure(p)) continue;
                const std::vector<Point> meet = adjacency_on_curve(plane, p, curve_ids);
                if (meet.empty()) continue;
                for (const std::vector<Point>& comp :
                     components(Subspace(plane.space(), meet))) {
                    if (comp.size() % 2 == 0) {
                        ok = false;
                        detail = "even component at interior point " +
                                 std::to_string(p);
                    }
                    // endpoints: degree <= 1 inside the component
                    for (Point e : comp) {
                        int deg = 0;
                        for (Point f : comp)
                            if (e != f && plane.space().comparable(e, f)) ++deg;
                        if (deg <= 1 && !plane.pure(e)) {
                            ok = false;
                            detail = "mixed endpoint at interior point " + std::to_string(p);
                        }
                    }
                }
            }
        }
        add("odd-adjacency-components", non_minimal, ok, detail);
    }

    {
        // every cyclic arc C: C and J - C have the same number of components
        bool ok = true;
        const std::vector<Coord> order = curve.clockwise();
        for (int start = 0; start < n && ok; ++start)
            for (int len = 1; len < n && ok; ++len) {
                std::vector<Point> arc, rest;
                for (int k = 0; k < n; ++k) {
                    const Point p = plane.id(order[static_cast<std::size_t>((start + k) % n)]);
                    (k < len ? arc : rest).push_back(p);
                }
                if (count_components(plane, arc) != count_components(plane, rest)) ok = false;
            }
        // small curves: every proper nonempty subset, not just arcs
        if (n <= 12) {
            for (unsigned mask = 1; mask + 1 < (1u << n) && ok; ++mask) {
                std::vector<Point> sub, rest;
                for (int k = 0; k < n; ++k) {
                    const Point p = plane.id(curve.points()[static_cast<std::size_t>(k)]);
                    ((mask >> k) & 1u ? sub : rest).push_back(p);
                }
                if (count_components(plane, sub) != count_components(plane, rest)) ok = false;
            }
        }
        add("subset-complement-components", true, ok, "");
    }

    {
        // at maximal interior distance from any pure interior point:
        // connected adjacency trace, with the size bounds
        bool ok = true;
        std::string detail;
        if (non_minimal) {
            const Subspace inside(plane.space(), reg.interior);
            for (Point p : reg.interior) {
                if (!plane.pure(p)) continue;
                Distance far = Distance::finite(0);
                for (Point q : reg.interior) {
                    const Distance d = distance(inside, p, q);
                    if (far < d) far = d;
                }
                std::vector<Point> at_max;
                for (Point q : reg.interior)
                    if (distance(inside, p, q) == far) at_max.push_back(q);
                const bool pure_at_max = std::any_of(at_max.begin(), at_max.end(),
                                                     [&](Point q) { return plane.pure(q); });
                for (Point q : at_max) {
                    const std::vector<Point> meet = adjacency_on_curve(plane, q, curve_ids);
                    if (!meet.empty() && count_components(plane, meet) != 1) {
                        ok = false;
                        detail = "disconnected adjacency trace at " + std::to_string(q);
                    }
                    const bool needs_three =
                        plane.pure(q) || (!plane.pure(q) && !pure_at_max);
                    if (needs_three && meet.size() < 3) {
                        ok = false;
                        detail = "adjacency trace smaller than 3 at " + std::to_string(q);
                    }
                }
            }
        }
        add("max-distance-adjacency", non_minimal, ok, detail);
    }

    return report;
}

}  // namespace dtop
