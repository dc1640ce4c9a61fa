#include "dtop/paths.hpp"

#include <algorithm>
#include <queue>

namespace dtop {

namespace {

constexpr std::size_t geodesic_cap = 100000;

void check_members(const Subspace& s, const std::vector<Point>& seq) {
    for (Point p : seq) require(s.contains(p), "sequence point not in space");
}

std::vector<int> bfs_dist(const Subspace& s, int from) {
    std::vector<int> dist(static_cast<std::size_t>(s.size()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(from)] = 0;
    q.push(from);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : s.adjacency_local(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

bool is_cots_path(const Subspace& s, const std::vector<Point>& seq) {
    check_members(s, seq);
    if (seq.empty()) return false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (!s.parent_space().comparable(seq[k], seq[k + 1])) return false;
    return true;
}

bool is_cots_arc(const Subspace& s, const std::vector<Point>& seq) {
    if (!is_cots_path(s, seq)) return false;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
            if (seq[a] == seq[b]) return false;
            const bool cmp = s.parent_space().comparable(seq[a], seq[b]);
            if (b == a + 1) {
                if (!cmp) return false;
            } else if (cmp) {
                return false;
            }
        }
    return true;
}

std::vector<Point> concat(const Subspace& s, const std::vector<Point>& p1,
                          const std::vector<Point>& p2) {
    require(is_cots_path(s, p1) && is_cots_path(s, p2), "inputs must be COTS-paths");
    require(p1.back() == p2.front(), "paths do not share an endpoint");
    std::vector<Point> out = p1;
    out.insert(out.end(), p2.begin() + 1, p2.end());
    return out;
}

std::vector<Point> extract_arc(const Subspace& s, const std::vector<Point>& path) {
    require(is_cots_path(s, path), "input must be a COTS-path");
    std::vector<Point> cur;
    for (Point p : path)
        if (cur.empty() || cur.back() != p) cur.push_back(p);

    const FiniteSpace& sp = s.parent_space();
    while (true) {
        bool spliced = false;
        for (std::size_t i = 0; i + 2 < cur.size() && !spliced; ++i) {
            std::size_t best = 0;
            bool found = false;
            for (std::size_t j = i + 2; j < cur.size(); ++j)
                if (cur[j] == cur[i] || sp.comparable(cur[i], cur[j])) {
                    best = j;
                    found = true;
                }
            if (!found) continue;
            std::vector<Point> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (cur[best] == cur[i]) {
                // duplicate point: drop everything between the two visits
                next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(best) + 1, cur.end());
            } else {
                // comparable shortcut: jump straight to the later point
                next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(best), cur.end());
            }
            cur = std::move(next);
            spliced = true;
        }
        if (!spliced) break;
    }
    ensure(is_cots_arc(s, cur), "loop removal failed to produce a COTS-arc");
    ensure(cur.front() == path.front() && cur.back() == path.back(),
           "loop removal moved an endpoint");
    return cur;
}

Distance distance(const Subspace& s, Point x, Point y) {
    const int lx = s.local(x), ly = s.local(y);
    require(lx >= 0 && ly >= 0, "point not in space");
    const std::vector<int> dist = bfs_dist(s, lx);
    const int d = dist[static_cast<std::size_t>(ly)];
    return d < 0 ? Distance::unreachable() : Distance::finite(d);
}

Distance set_distance(const Subspace& s, Point x, const std::vector<Point>& a) {
    require(!a.empty(), "set distance needs a nonempty set");
    const int lx = s.local(x);
    require(lx >= 0, "point not in space");
    const std::vector<int> dist = bfs_dist(s, lx);
    Distance best = Distance::finite(0);
    for (Point p : a) {
        const int lp = s.local(p);
        require(lp >= 0, "point not in space");
        const int d = dist[static_cast<std::size_t>(lp)];
        const Distance dp = d < 0 ? Distance::unreachable() : Distance::finite(d);
        if (best < dp) best = dp;
    }
    return best;
}

Distance set_distance(const Subspace& s, const std::vector<Point>& a,
                      const std::vector<Point>& b) {
    require(!a.empty() && !b.empty(), "set distance needs nonempty sets");
    Distance best = Distance::finite(0);
    for (Point x : a) {
        const Distance d = set_distance(s, x, b);
        if (best < d) best = d;
    }
    return best;
}

std::vector<Point> sphere(const Subspace& s, Point x, int n) {
    const int lx = s.local(x);
    require(lx >= 0, "point not in space");
    require(n >= 0, "radius must be nonnegative");
    const std::vector<int> dist = bfs_dist(s, lx);
    std::vector<Point> out;
    for (int v = 0; v < s.size(); ++v)
        if (dist[static_cast<std::size_t>(v)] == n) out.push_back(s.point(v));
    return out;
}

std::vector<Point> disk(const Subspace& s, Point x, int n) {
    const int lx = s.local(x);
    require(lx >= 0, "point not in space");
    require(n >= 0, "radius must be nonnegative");
    const std::vector<int> dist = bfs_dist(s, lx);
    std::vector<Point> out;
    for (int v = 0; v < s.size(); ++v) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d >= 0 && d <= n) out.push_back(s.point(v));
    }
    return out;
}

Distance diameter(const Subspace& s) {
    Distance best = Distance::finite(0);
    for (int v = 0; v < s.size(); ++v) {
        const std::vector<int> dist = bfs_dist(s, v);
        for (int w = 0; w < s.size(); ++w) {
            const int d = dist[static_cast<std::size_t>(w)];
            const Distance dw = d < 0 ? Distance::unreachable() : Distance::finite(d);
            if (best < dw) best = dw;
        }
    }
    return best;
}

std::vector<std::vector<Point>> geodesics(const Subspace& s, Point x, Point y) {
    const int lx = s.local(x), ly = s.local(y);
    require(lx >= 0 && ly >= 0, "point not in space");
    const std::vector<int> dist = bfs_dist(s, lx);
    if (dist[static_cast<std::size_t>(ly)] < 0) return {};

    std::vector<std::vector<Point>> out;
    std::vector<int> stack{lx};
    // depth-first over the BFS dag, ascending ids, so output is sorted
    auto extend = [&](auto&& self, int v) -> void {
        if (v == ly) {
            std::vector<Point> path;
            path.reserve(stack.size());
            for (int u : stack) path.push_back(s.point(u));
            out.push_back(std::move(path));
            if (out.size() > geodesic_cap)
                throw std::overflow_error("geodesic enumeration exceeded 100000 results");
            return;
        }
        for (int w : s.adjacency_local(v)) {
            if (dist[static_cast<std::size_t>(w)] != dist[static_cast<std::size_t>(v)] + 1)
                continue;
            if (dist[static_cast<std::size_t>(w)] > dist[static_cast<std::size_t>(ly)]) continue;
            stack.push_back(w);
            self(self, w);
            stack.pop_back();
        }
    };
    extend(extend, lx);
    return out;
}

bool is_cots_path(const FiniteSpace& s, const std::vector<Point>& seq) {
    return is_cots_path(Subspace::whole(s), seq);
}
bool is_cots_arc(const FiniteSpace& s, const std::vector<Point>& seq) {
    return is_cots_arc(Subspace::whole(s), seq);
}
std::vector<Point> extract_arc(const FiniteSpace& s, const std::vector<Point>& path) {
    return extract_arc(Subspace::whole(s), path);
}
Distance distance(const FiniteSpace& s, Point x, Point y) {
    return distance(Subspace::whole(s), x, y);
}
Distance set_distance(const FiniteSpace& s, Point x, const std::vector<Point>& a) {
    return set_distance(Subspace::whole(s), x, a);
}
Distance set_distance(const FiniteSpace& s, const std::vector<Point>& a,
                      const std::vector<Point>& b) {
    return set_distance(Subspace::whole(s), a, b);
}
std::vector<Point> sphere(const FiniteSpace& s, Point x, int n) {
    return sphere(Subspace::whole(s), x, n);
}
std::vector<Point> disk(const FiniteSpace& s, Point x, int n) {
    return disk(Subspace::whole(s), x, n);
}
Distance diameter(const FiniteSpace& s) { return diameter(Subspace::whole(s)); }
std::vector<std::vector<Point>> geodesics(const FiniteSpace& s, Point x, Point y) {
    return geodesics(Subspace::whole(s), x, y);
}

}  // namespace dtop
