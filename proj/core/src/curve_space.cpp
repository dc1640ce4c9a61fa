#include "dtop/curve_space.hpp"

#include <algorithm>
#include <string>

namespace dtop {

namespace {

/// Canonical rooted search for cycles: the root is the smallest vertex of
/// the cycle, every other vertex is larger, and of the two directions the
/// one whose second vertex is smaller than its last is kept. `chordless`
/// additionally rejects any candidate adjacent to a non-consecutive path
/// vertex, which restricts the output to induced cycles.
///
/// A candidate adjacent to the root may close a cycle but never extends
/// the path. For induced cycles extending would plant a chord; for the
/// plain count the callers are grid graphs ordered row-major, where the
/// root has only two neighbors above it, so a root-adjacent candidate is
/// always one of the two cycle ends.
template <typename Adj, typename Emit>
void rooted_cycles(int n, const Adj& adjacent, bool chordless, const Emit& emit) {
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto extend = [&](auto&& self) -> void {
        int last = path.back();
        int root = path.front();
        for (int v = root + 1; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || !adjacent(last, v)) continue;
            bool to_root = adjacent(v, root);
            bool chord = false;
            for (std::size_t k = 1; k + 1 < path.size(); ++k)
                if (adjacent(v, path[k])) {
                    chord = true;
                    break;
                }
            if (chordless && chord) continue;
            if (path.size() >= 2 && to_root) {
                if (path.size() + 1 >= 4 && path[1] < v) {
                    path.push_back(v);
                    emit(path);
                    path.pop_back();
                }
                continue;
            }
            used[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };

    for (int r = 0; r + 3 < n; ++r) {
        path.assign(1, r);
        used.assign(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(r)] = 1;
        extend(extend);
    }
}

}  // namespace

int CurvePoset::index_of(const JordanCurve& c) const {
    for (int k = 0; k < size(); ++k)
        if (curves[static_cast<std::size_t>(k)] == c) return k;
    return -1;
}

FiniteSpace CurvePoset::as_space() const {
    return FiniteSpace(size(), leq);
}

std::vector<JordanCurve> enumerate_curves(PlanePtr plane) {
    require(plane != nullptr, "plane required");
    require(plane->width() <= 12 && plane->height() <= 12,
            "enumeration is capped at 12x12 planes");
    const FiniteSpace& sp = plane->space();
    auto adjacent = [&](int a, int b) { return a != b && sp.comparable(a, b); };

    std::vector<JordanCurve> out;
    rooted_cycles(sp.size(), adjacent, /*chordless=*/true, [&](const std::vector<int>& cyc) {
        std::vector<Coord> pts;
        pts.reserve(cyc.size());
        for (int p : cyc) pts.push_back(plane->coord(p));
        out.emplace_back(plane, pts);
    });
    std::sort(out.begin(), out.end(),
              [](const JordanCurve& a, const JordanCurve& b) { return a.key() < b.key(); });
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        ensure(!(out[i] == out[i + 1]), "enumeration produced a duplicate curve");
    return out;
}

CurvePoset build_poset(PlanePtr plane, std::vector<JordanCurve> curves) {
    require(plane != nullptr, "plane required");
    for (const JordanCurve& c : curves)
        require(c.plane()->spec() == plane->spec(), "curve from a different plane");
    std::sort(curves.begin(), curves.end(),
              [](const JordanCurve& a, const JordanCurve& b) { return a.key() < b.key(); });
    for (std::size_t i = 0; i + 1 < curves.size(); ++i)
        require(!(curves[i] == curves[i + 1]), "duplicate curve in poset input");

    const int n = static_cast<int>(curves.size());
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<std::uint8_t> rel(nn * nn, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (curve_leq(curves[static_cast<std::size_t>(a)],
                          curves[static_cast<std::size_t>(b)]))
                rel[static_cast<std::size_t>(a) * nn + b] = 1;

    CurvePoset out;
    out.plane = std::move(plane);
    out.curves = std::move(curves);
    out.leq = rel;
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (out.leq[static_cast<std::size_t>(a) * nn + k])
                for (int b = 0; b < n; ++b)
                    if (out.leq[static_cast<std::size_t>(k) * nn + b])
                        out.leq[static_cast<std::size_t>(a) * nn + b] = 1;
    out.closure_added = 0;
    for (std::size_t i = 0; i < nn * nn; ++i)
        if (out.leq[i] && !rel[i]) ++out.closure_added;

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            ensure(!(out.leq_at(a, b) && out.leq_at(b, a)),
                   "curve order must be antisymmetric");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !out.leq_at(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (c != a && c != b && out.leq_at(a, c) && out.leq_at(c, b)) direct = false;
            if (direct) out.covers.emplace_back(a, b);
        }
    return out;
}

CurvePoset curve_poset(PlanePtr plane) {
    auto curves = enumerate_curves(plane);
    return build_poset(std::move(plane), std::move(curves));
}

Extremals extremal_elements(const CurvePoset& poset) {
    Extremals out;
    const int n = poset.size();
    for (int a = 0; a < n; ++a) {
        bool has_upper = false;
        bool has_lower = false;
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            if (poset.leq_at(a, b)) has_upper = true;
            if (poset.leq_at(b, a)) has_lower = true;
        }
        if (!has_upper) out.maximal.push_back(a);
        if (!has_lower) out.minimal.push_back(a);
    }
    return out;
}

SpaceReport space_report(const CurvePoset& poset) {
    SpaceReport r;
    const int n = poset.size();
    r.curves = n;
    r.covers = static_cast<int>(poset.covers.size());
    r.closure_added = poset.closure_added;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && poset.leq_at(a, b)) ++r.strict_pairs;

    Extremals ext = extremal_elements(poset);
    r.maximal = static_cast<int>(ext.maximal.size());
    r.minimal = static_cast<int>(ext.minimal.size());

    if (n > 0) {
        FiniteSpace sp = poset.as_space();
        r.connected = is_connected(sp);
        std::vector<Point> core = core_members(Subspace::whole(sp));
        r.core_size = static_cast<int>(core.size());
        r.contractible = r.core_size == 1;
        int h = 0;
        for (int v : heights(sp)) h = std::max(h, v);
        r.height = h;
    }

    const DigitalPlane& pl = *poset.plane;
    auto has_class = [&](const JordanCurve& c, PointClass cls) {
        for (const Coord& pt : c.points())
            if (pl.classify(pt.first, pt.second) == cls) return true;
        return false;
    };
    std::vector<char> is_max(static_cast<std::size_t>(n), 0);
    std::vector<char> is_min(static_cast<std::size_t>(n), 0);
    for (int a : ext.maximal) is_max[static_cast<std::size_t>(a)] = 1;
    for (int a : ext.minimal) is_min[static_cast<std::size_t>(a)] = 1;
    r.extremal_by_class = true;
    for (int a = 0; a < n; ++a) {
        const JordanCurve& c = poset.curves[static_cast<std::size_t>(a)];
        bool open_free = !has_class(c, PointClass::open_point);
        bool closed_free = !has_class(c, PointClass::closed_point);
        if (open_free && !is_max[static_cast<std::size_t>(a)]) r.extremal_by_class = false;
        if (closed_free && !is_min[static_cast<std::size_t>(a)]) r.extremal_by_class = false;
        if (is_max[static_cast<std::size_t>(a)] && !open_free) ++r.maximal_with_open;
        if (is_min[static_cast<std::size_t>(a)] && !closed_free) ++r.minimal_with_closed;
    }
    return r;
}

MinimalCurveSpace minimal_curve_space(PlanePtr plane) {
    require(plane != nullptr, "plane required");
    require(plane->spec().topology == Topology::khalimsky,
            "minimal curves need a Khalimsky plane");
    std::vector<Point> inner = plane->inner_points();
    require(!inner.empty(), "plane has no inner points");

    std::vector<JordanCurve> curves;
    curves.reserve(inner.size());
    for (Point p : inner) curves.push_back(minimal_curve(plane, plane->coord(p)));

    MinimalCurveSpace out;
    out.poset = build_poset(plane, std::move(curves));
    out.centers.reserve(out.poset.curves.size());
    for (const JordanCurve& c : out.poset.curves) {
        std::vector<Point> ids = interior(c);
        ensure(ids.size() == 1, "minimal curve with a non-singleton interior");
        out.centers.push_back(plane->coord(ids.front()));
    }

    const FiniteSpace& sp = plane->space();
    out.iso_verified = true;
    const int n = out.poset.size();
    for (int a = 0; a < n && out.iso_verified; ++a)
        for (int b = 0; b < n; ++b) {
            bool curve_rel = out.poset.leq_at(a, b);
            bool dual_rel = sp.leq(plane->id(out.centers[static_cast<std::size_t>(b)]),
                                   plane->id(out.centers[static_cast<std::size_t>(a)]));
            if (curve_rel != dual_rel) {
                out.iso_verified = false;
                break;
            }
        }
    return out;
}

long long count_grid_cycles(int n) {
    require(n >= 0 && n <= 5, "grid-cycle count supports n in [0, 5]");
    const int side = n + 1;
    const int verts = side * side;
    auto adjacent = [side](int a, int b) {
        int ai = a / side, aj = a % side;
        int bi = b / side, bj = b % side;
        return std::abs(ai - bi) + std::abs(aj - bj) == 1;
    };
    long long count = 0;
    rooted_cycles(verts, adjacent, /*chordless=*/false,
                  [&](const std::vector<int>&) { ++count; });
    return count;
}

long long count_3xn(int n, EndpointKind side3) {
    require(n >= 3 && n <= 12, "3 x n count supports n in [3, 12]");
    PlaneSpec spec;
    spec.width = 3;
    spec.height = n;
    spec.topology = Topology::khalimsky;
    spec.x_closed_parity = side3 == EndpointKind::closed_endpoint ? 0 : 1;
    spec.y_closed_parity = 0;
    return static_cast<long long>(enumerate_curves(make_plane(spec)).size());
}

}  // namespace dtop
