#include "dtop/homotopy.hpp"

#include <algorithm>
#include <cstdint>

namespace dtop {

namespace {

bool same_plane(const JordanCurve& a, const JordanCurve& b) {
    return a.plane()->spec() == b.plane()->spec();
}

/// Reachability in the product of the two cell sequences: a monotone
/// lattice path from (0, 0) to (m, n) where standing at (x, y) means the
/// parameterizations currently occupy J-cell x mod m and K-cell (k0+y)
/// mod n. Every visited lattice point needs J's point <= K's point, and a
/// simultaneous advance additionally needs owner <= owner for the two
/// transitions crossed at the same instant.
bool cells_reachable(const DigitalPlane& pl, const std::vector<Cell>& a,
                     const std::vector<Cell>& b, int k0) {
    const FiniteSpace& sp = pl.space();
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    auto pa = [&](int x) { return pl.id(a[static_cast<std::size_t>(x % m)].point); };
    auto pb = [&](int y) { return pl.id(b[static_cast<std::size_t>((k0 + y) % n)].point); };
    auto adm = [&](int x, int y) { return sp.leq(pa(x), pb(y)); };
    auto owner_a = [&](int x) {
        return a[static_cast<std::size_t>(x % m)].kind == CellKind::closed_interval
                   ? pa(x)
                   : pa(x + 1);
    };
    auto owner_b = [&](int y) {
        return b[static_cast<std::size_t>((k0 + y) % n)].kind == CellKind::closed_interval
                   ? pb(y)
                   : pb(y + 1);
    };

    std::vector<std::uint8_t> reach(static_cast<std::size_t>(m + 1) * (n + 1), 0);
    auto cell = [&](int x, int y) -> std::uint8_t& {
        return reach[static_cast<std::size_t>(x) * (n + 1) + y];
    };
    if (!adm(0, 0)) return false;
    cell(0, 0) = 1;
    for (int x = 0; x <= m; ++x) {
        for (int y = 0; y <= n; ++y) {
            if (!cell(x, y)) continue;
            if (x < m && adm(x + 1, y)) cell(x + 1, y) = 1;
            if (y < n && adm(x, y + 1)) cell(x, y + 1) = 1;
            if (x < m && y < n && adm(x + 1, y + 1) &&
                sp.leq(owner_a(x), owner_b(y)))
                cell(x + 1, y + 1) = 1;
        }
    }
    return cell(m, n) != 0;
}

FenceDir dir_between(const JordanCurve& a, const JordanCurve& b) {
    if (curve_leq(a, b)) return FenceDir::leq;
    ensure(curve_leq(b, a), "consecutive fence curves are incomparable");
    return FenceDir::geq;
}

}  // namespace

Parameterization standard_parameterization(const JordanCurve& curve) {
    const DigitalPlane& pl = *curve.plane();
    const FiniteSpace& sp = pl.space();
    auto cyc = curve.clockwise();
    const int n = static_cast<int>(cyc.size());
    Parameterization out;
    out.cells.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point prev = pl.id(cyc[static_cast<std::size_t>((i + n - 1) % n)]);
        Point cur = pl.id(cyc[static_cast<std::size_t>(i)]);
        Point next = pl.id(cyc[static_cast<std::size_t>((i + 1) % n)]);
        bool maxi = sp.leq(prev, cur) && sp.leq(next, cur);
        bool mini = sp.leq(cur, prev) && sp.leq(cur, next);
        ensure(maxi != mini, "curve point must be a strict local extremum");
        out.cells.push_back({cyc[static_cast<std::size_t>(i)],
                             maxi ? CellKind::closed_interval : CellKind::open_interval});
    }
    for (int i = 0; i < n; ++i)
        ensure(out.cells[static_cast<std::size_t>(i)].kind !=
                   out.cells[static_cast<std::size_t>((i + 1) % n)].kind,
               "cell kinds must alternate");
    return out;
}

bool curve_leq(const JordanCurve& J, const JordanCurve& K) {
    require(same_plane(J, K), "curves live in different planes");
    if (J == K) return true;
    const DigitalPlane& pl = *J.plane();
    auto fa = standard_parameterization(J);
    auto fb = standard_parameterization(K);
    for (int orient = 0; orient < 2; ++orient) {
        std::vector<Cell> cells = fb.cells;
        if (orient == 1) std::reverse(cells.begin(), cells.end());
        const int n = static_cast<int>(cells.size());
        for (int k0 = 0; k0 < n; ++k0)
            if (cells_reachable(pl, fa.cells, cells, k0)) return true;
    }
    return false;
}

bool validate_fence(const Fence& fence) {
    if (fence.curves.empty()) return false;
    if (fence.dirs.size() + 1 != fence.curves.size()) return false;
    for (std::size_t i = 0; i + 1 < fence.curves.size(); ++i) {
        const JordanCurve& a = fence.curves[i];
        const JordanCurve& b = fence.curves[i + 1];
        if (!same_plane(a, b)) return false;
        bool ok = fence.dirs[i] == FenceDir::leq ? curve_leq(a, b) : curve_leq(b, a);
        if (!ok) return false;
    }
    return true;
}

ShrinkResult shrink(const JordanCurve& J, const Parameterization& f, Coord basepoint) {
    PlanePtr plptr = J.plane();
    const DigitalPlane& pl = *plptr;
    const FiniteSpace& sp = pl.space();
    require(f == standard_parameterization(J), "parameterization does not belong to the curve");
    require(pl.in_bounds(basepoint.first, basepoint.second), "basepoint out of bounds");

    std::vector<Point> inside_ids = interior(J);
    Point p = pl.id(basepoint);
    require(std::binary_search(inside_ids.begin(), inside_ids.end(), p),
            "basepoint is not an interior point of the curve");
    if (inside_ids.size() == 1) return {J, f, basepoint, std::nullopt};
    require(pl.pure(p), "basepoint must be a pure point");

    // Farthest interior point from the basepoint; pure candidates beat
    // mixed ones, then smallest (i, j). Ids ascend in (i, j) order, so the
    // first hit in each class is already the lexicographic minimum.
    Subspace inside(sp, inside_ids);
    std::vector<int> dist(inside_ids.size(), -1);
    {
        std::vector<int> queue;
        int lp = inside.local(p);
        dist[static_cast<std::size_t>(lp)] = 0;
        queue.push_back(lp);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : inside.adjacency_local(queue[head]))
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] =
                        dist[static_cast<std::size_t>(queue[head])] + 1;
                    queue.push_back(w);
                }
    }
    int far = -1;
    for (int d : dist) {
        ensure(d >= 0, "curve interior must be connected");
        far = std::max(far, d);
    }
    Point q = -1;
    for (int local = 0; local < inside.size() && q < 0; ++local)
        if (dist[static_cast<std::size_t>(local)] == far && pl.pure(inside.point(local)))
            q = inside.point(local);
    for (int local = 0; local < inside.size() && q < 0; ++local)
        if (dist[static_cast<std::size_t>(local)] == far) q = inside.point(local);
    ensure(q >= 0 && q != p, "farthest point selection failed");

    // A(q) meet J must be one odd arc of the cycle, and a proper nonempty
    // subset of A(q).
    auto cyc = J.clockwise();
    const int cn = static_cast<int>(cyc.size());
    const auto& adj = sp.adjacency(q);
    std::vector<char> mark(static_cast<std::size_t>(cn), 0);
    std::vector<Point> meet;
    for (int i = 0; i < cn; ++i) {
        Point c = pl.id(cyc[static_cast<std::size_t>(i)]);
        if (std::binary_search(adj.begin(), adj.end(), c)) {
            mark[static_cast<std::size_t>(i)] = 1;
            meet.push_back(c);
        }
    }
    const int cnt = static_cast<int>(meet.size());
    ensure(cnt >= 3 && cnt % 2 == 1 && cnt <= 7, "adjacency trace has unexpected size");
    ensure(cnt < static_cast<int>(adj.size()), "adjacency trace must be proper");
    std::sort(meet.begin(), meet.end());
    ensure(is_connected(Subspace(sp, meet)), "adjacency trace must be connected");

    int start = -1;
    for (int i = 0; i < cn; ++i)
        if (mark[static_cast<std::size_t>(i)] &&
            !mark[static_cast<std::size_t>((i + cn - 1) % cn)]) {
            ensure(start < 0, "adjacency trace must be one arc of the cycle");
            start = i;
        }
    ensure(start >= 0, "adjacency trace covers the whole cycle");
    for (int k = 0; k < cnt; ++k)
        ensure(mark[static_cast<std::size_t>((start + k) % cn)],
               "adjacency trace must be contiguous");

    // Drop the arc's inner points, put q in their place.
    std::vector<char> drop(static_cast<std::size_t>(cn), 0);
    for (int k = 1; k + 1 < cnt; ++k) drop[static_cast<std::size_t>((start + k) % cn)] = 1;
    std::vector<Coord> kpts;
    kpts.reserve(static_cast<std::size_t>(cn - cnt + 3));
    for (int i = 0; i < cn; ++i)
        if (!drop[static_cast<std::size_t>(i)]) kpts.push_back(cyc[static_cast<std::size_t>(i)]);
    kpts.push_back(pl.coord(q));
    ensure(is_jordan_curve(pl, kpts), "shrunk point set must stay a Jordan curve");
    JordanCurve shrunk(plptr, kpts);

    std::vector<Point> expect;
    expect.reserve(inside_ids.size() - 1);
    for (Point x : inside_ids)
        if (x != q) expect.push_back(x);
    ensure(interior(shrunk) == expect, "interior must lose exactly the removed point");
    ensure(curve_leq(shrunk, J) || curve_leq(J, shrunk),
           "shrunk curve must be comparable with its source");

    return {shrunk, standard_parameterization(shrunk), basepoint, pl.coord(q)};
}

Fence minimalize(const JordanCurve& J) {
    std::vector<Point> inside = interior(J);
    if (inside.size() == 1) return Fence{{J}, {}};
    const DigitalPlane& pl = *J.plane();
    for (Point x : inside)
        if (pl.pure(x)) return minimalize(J, pl.coord(x));
    throw internal_error("non-minimal curve without a pure interior point");
}

Fence minimalize(const JordanCurve& J, Coord basepoint) {
    const DigitalPlane& pl = *J.plane();
    require(pl.in_bounds(basepoint.first, basepoint.second), "basepoint out of bounds");
    {
        std::vector<Point> inside = interior(J);
        require(std::binary_search(inside.begin(), inside.end(), pl.id(basepoint)),
                "basepoint is not an interior point of the curve");
    }
    Fence out;
    out.curves.push_back(J);
    Parameterization f = standard_parameterization(J);
    while (interior(out.curves.back()).size() > 1) {
        const JordanCurve& cur = out.curves.back();
        ShrinkResult r = shrink(cur, f, basepoint);
        ensure(r.removed.has_value(), "shrink made no progress");
        out.dirs.push_back(dir_between(cur, r.curve));
        out.curves.push_back(r.curve);
        f = r.param;
    }
    ensure(interior(out.curves.back()) == std::vector<Point>{pl.id(basepoint)},
           "fence must end around the basepoint");
    ensure(out.curves.back() == minimal_curve(J.plane(), basepoint),
           "fence must end at the adjacency-set curve");
    return out;
}

Fence minimal_path(PlanePtr plane, Coord p, Coord q) {
    JordanCurve first = minimal_curve(plane, p);
    JordanCurve last = minimal_curve(plane, q);
    const FiniteSpace& sp = plane->space();
    Subspace inner(sp, plane->inner_points());
    int lp = inner.local(plane->id(p));
    int lq = inner.local(plane->id(q));
    ensure(lp >= 0 && lq >= 0, "minimal-curve centers must be inner points");

    // Shortest fence of centers; ties broken toward smaller ids when
    // walking back from the target.
    std::vector<int> dist(static_cast<std::size_t>(inner.size()), -1);
    std::vector<int> queue;
    dist[static_cast<std::size_t>(lp)] = 0;
    queue.push_back(lp);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : inner.adjacency_local(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    require(dist[static_cast<std::size_t>(lq)] >= 0,
            "no fence of inner points joins the centers");

    std::vector<Coord> centers;
    int cur = lq;
    centers.push_back(plane->coord(inner.point(cur)));
    while (cur != lp) {
        int next = -1;
        for (int w : inner.adjacency_local(cur))
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
                next = w;
                break;
            }
        ensure(next >= 0, "broken shortest-fence reconstruction");
        cur = next;
        centers.push_back(plane->coord(inner.point(cur)));
    }
    std::reverse(centers.begin(), centers.end());

    Fence out;
    for (const Coord& c : centers) out.curves.push_back(minimal_curve(plane, c));
    for (std::size_t i = 0; i + 1 < out.curves.size(); ++i)
        out.dirs.push_back(dir_between(out.curves[i], out.curves[i + 1]));
    ensure(out.curves.front() == first && out.curves.back() == last,
           "fence endpoints must be the requested minimal curves");
    return out;
}

Fence morph(const JordanCurve& J, const JordanCurve& K) {
    require(same_plane(J, K), "curves live in different planes");
    if (J == K) return Fence{{J}, {}};
    PlanePtr plane = J.plane();
    Fence down = minimalize(J);
    Fence up = minimalize(K);
    Coord cj = plane->coord(interior(down.curves.back()).front());
    Coord ck = plane->coord(interior(up.curves.back()).front());
    Fence mid = minimal_path(plane, cj, ck);

    std::vector<JordanCurve> seq = down.curves;
    for (std::size_t i = 1; i < mid.curves.size(); ++i) seq.push_back(mid.curves[i]);
    for (std::size_t i = up.curves.size() - 1; i > 0; --i) seq.push_back(up.curves[i - 1]);
    ensure(mid.curves.front() == down.curves.back(), "fence splice mismatch at the first center");
    ensure(mid.curves.back() == up.curves.back(), "fence splice mismatch at the second center");

    std::vector<JordanCurve> dedup;
    for (const JordanCurve& c : seq)
        if (dedup.empty() || !(dedup.back() == c)) dedup.push_back(c);

    Fence out;
    out.curves = std::move(dedup);
    for (std::size_t i = 0; i + 1 < out.curves.size(); ++i)
        out.dirs.push_back(dir_between(out.curves[i], out.curves[i + 1]));
    ensure(out.curves.front() == J && out.curves.back() == K,
           "morph must join the two requested curves");
    return out;
}

}  // namespace dtop
