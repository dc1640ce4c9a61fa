#include "dtop/finite_space.hpp"

#include <algorithm>
#include <queue>

namespace dtop {

namespace {

// Up-rows as bit words: row a holds {c | a <= c}.
std::vector<std::uint64_t> up_rows(int n, const std::vector<std::uint8_t>& m) {
    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (m[static_cast<std::size_t>(a) * n + b])
                rows[static_cast<std::size_t>(a) * words + b / 64] |= std::uint64_t{1} << (b % 64);
    return rows;
}

}  // namespace

FiniteSpace::FiniteSpace(int n, std::vector<std::uint8_t> leq_matrix)
    : n_(n), leq_(std::move(leq_matrix)) {
    require(n >= 0 && n <= max_points, "space size out of range");
    require(leq_.size() == static_cast<std::size_t>(n) * n, "order matrix has wrong size");

    for (int a = 0; a < n_; ++a)
        require(leq_[static_cast<std::size_t>(a) * n_ + a] != 0, "order is not reflexive");
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            require(!(leq_[static_cast<std::size_t>(a) * n_ + b] && leq_[static_cast<std::size_t>(b) * n_ + a]),
                    "order is not antisymmetric");

    const int words = (n_ + 63) / 64;
    const auto rows = up_rows(n_, leq_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!leq_[static_cast<std::size_t>(a) * n_ + b] || a == b) continue;
            // a <= b requires up(b) within up(a)
            for (int w = 0; w < words; ++w)
                require((rows[static_cast<std::size_t>(b) * words + w] &
                         ~rows[static_cast<std::size_t>(a) * words + w]) == 0,
                        "order is not transitive");
        }

    adj_.resize(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && (leq_[static_cast<std::size_t>(a) * n_ + b] ||
                           leq_[static_cast<std::size_t>(b) * n_ + a]))
                adj_[static_cast<std::size_t>(a)].push_back(b);
}

const std::vector<Point>& FiniteSpace::adjacency(Point x) const {
    check_point(x);
    return adj_[static_cast<std::size_t>(x)];
}

std::vector<Point> FiniteSpace::down_set(Point x) const {
    check_point(x);
    std::vector<Point> out;
    for (int y = 0; y < n_; ++y)
        if (leq_[static_cast<std::size_t>(y) * n_ + x]) out.push_back(y);
    return out;
}

std::vector<Point> FiniteSpace::up_set(Point x) const {
    check_point(x);
    std::vector<Point> out;
    for (int y = 0; y < n_; ++y)
        if (leq_[static_cast<std::size_t>(x) * n_ + y]) out.push_back(y);
    return out;
}

FiniteSpace FiniteSpace::dual() const {
    std::vector<std::uint8_t> m(leq_.size());
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            m[static_cast<std::size_t>(a) * n_ + b] = leq_[static_cast<std::size_t>(b) * n_ + a];
    return FiniteSpace(n_, std::move(m));
}

FiniteSpace product(const FiniteSpace& first, const FiniteSpace& second) {
    const int na = first.size(), nb = second.size();
    require(static_cast<long long>(na) * nb <= FiniteSpace::max_points,
            "product space too large");
    const int n = na * nb;
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    if (first.leq(a1, a2) && second.leq(b1, b2))
                        m[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] = 1;
    return FiniteSpace(n, std::move(m));
}

Subspace::Subspace(const FiniteSpace& parent, std::vector<Point> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    require(std::adjacent_find(members_.begin(), members_.end()) == members_.end(),
            "subspace members contain duplicates");
    if (!members_.empty())
        require(members_.front() >= 0 && members_.back() < parent.size(),
                "subspace member out of range");

    local_of_.assign(static_cast<std::size_t>(parent.size()), -1);
    for (int k = 0; k < size(); ++k) local_of_[static_cast<std::size_t>(members_[k])] = k;

    adj_.resize(static_cast<std::size_t>(size()));
    for (int k = 0; k < size(); ++k)
        for (Point q : parent.adjacency(members_[static_cast<std::size_t>(k)])) {
            const int lq = local_of_[static_cast<std::size_t>(q)];
            if (lq >= 0) adj_[static_cast<std::size_t>(k)].push_back(lq);
        }
}

Subspace Subspace::whole(const FiniteSpace& parent) {
    std::vector<Point> all(static_cast<std::size_t>(parent.size()));
    for (int i = 0; i < parent.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return Subspace(parent, std::move(all));
}

int Subspace::local(Point p) const {
    if (p < 0 || p >= parent_->size()) return -1;
    return local_of_[static_cast<std::size_t>(p)];
}

FiniteSpace Subspace::as_space() const {
    const int n = size();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq_local(a, b)) m[static_cast<std::size_t>(a) * n + b] = 1;
    return FiniteSpace(n, std::move(m));
}

std::vector<std::vector<Point>> components(const Subspace& s) {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(static_cast<std::size_t>(s.size()), 0);
    for (int start = 0; start < s.size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<Point> comp;
        std::queue<int> q;
        q.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            comp.push_back(s.point(v));
            for (int w : s.adjacency_local(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::vector<Point>> components(const FiniteSpace& s) {
    return components(Subspace::whole(s));
}

bool is_connected(const Subspace& s) { return components(s).size() == 1; }
bool is_connected(const FiniteSpace& s) { return components(s).size() == 1; }

namespace {

bool is_beat_local(const Subspace& s, int x) {
    // greatest element of the punctured down-set
    {
        std::vector<int> below;
        for (int y = 0; y < s.size(); ++y)
            if (y != x && s.leq_local(y, x)) below.push_back(y);
        if (!below.empty()) {
            for (int m : below) {
                bool greatest = true;
                for (int y : below)
                    if (!s.leq_local(y, m)) {
                        greatest = false;
                        break;
                    }
                if (greatest) return true;
            }
        }
    }
    // least element of the punctured up-set
    {
        std::vector<int> above;
        for (int y = 0; y < s.size(); ++y)
            if (y != x && s.leq_local(x, y)) above.push_back(y);
        if (!above.empty()) {
            for (int m : above) {
                bool least = true;
                for (int y : above)
                    if (!s.leq_local(m, y)) {
                        least = false;
                        break;
                    }
                if (least) return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<Point> beat_points(const Subspace& s) {
    std::vector<Point> out;
    for (int x = 0; x < s.size(); ++x)
        if (is_beat_local(s, x)) out.push_back(s.point(x));
    return out;
}

std::vector<Point> beat_points(const FiniteSpace& s) {
    return beat_points(Subspace::whole(s));
}

std::vector<Point> core_members(const Subspace& s, const std::vector<Point>& preference) {
    std::vector<Point> current = s.members();
    while (true) {
        Subspace sub(s.parent_space(), current);
        const std::vector<Point> beats = beat_points(sub);
        if (beats.empty()) break;
        Point victim = -1;
        for (Point p : preference)
            if (std::find(beats.begin(), beats.end(), p) != beats.end()) {
                victim = p;
                break;
            }
        ensure(victim >= 0, "beat point missing from preference order");
        current.erase(std::find(current.begin(), current.end(), victim));
    }
    return current;
}

std::vector<Point> core_members(const Subspace& s) {
    return core_members(s, s.members());
}

FiniteSpace core(const FiniteSpace& s) {
    return Subspace(s, core_members(Subspace::whole(s))).as_space();
}

bool is_contractible(const Subspace& s) {
    return core_members(s).size() == 1;
}

bool is_contractible(const FiniteSpace& s) {
    return is_contractible(Subspace::whole(s));
}

bool is_weak_point(const Subspace& s, Point x) {
    const int lx = s.local(x);
    require(lx >= 0, "point not in subspace");
    std::vector<Point> below, above;
    for (int y = 0; y < s.size(); ++y) {
        if (y == lx) continue;
        if (s.leq_local(y, lx)) below.push_back(s.point(y));
        if (s.leq_local(lx, y)) above.push_back(s.point(y));
    }
    if (!below.empty() && is_contractible(Subspace(s.parent_space(), below))) return true;
    if (!above.empty() && is_contractible(Subspace(s.parent_space(), above))) return true;
    return false;
}

bool is_weak_point(const FiniteSpace& s, Point x) {
    return is_weak_point(Subspace::whole(s), x);
}

std::vector<int> heights(const FiniteSpace& s) {
    const int n = s.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::vector<int> downsize(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        downsize[static_cast<std::size_t>(i)] = static_cast<int>(s.down_set(i).size());
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return downsize[static_cast<std::size_t>(a)] < downsize[static_cast<std::size_t>(b)]; });
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    for (int idx : order)
        for (Point y : s.down_set(idx))
            if (y != idx) h[static_cast<std::size_t>(idx)] = std::max(h[static_cast<std::size_t>(idx)], h[static_cast<std::size_t>(y)] + 1);
    return h;
}

}  // namespace dtop
