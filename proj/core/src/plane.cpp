#include "dtop/plane.hpp"

#include <algorithm>

namespace dtop {

namespace {

Cots make_cots_with_parity(int length, int closed_parity) {
    require(length >= 2, "COTS needs at least 2 points");
    require(length <= FiniteSpace::max_points, "COTS too long");
    std::vector<std::uint8_t> m(static_cast<std::size_t>(length) * length, 0);
    auto closed = [&](int i) { return i % 2 == closed_parity; };
    for (int a = 0; a < length; ++a) {
        m[static_cast<std::size_t>(a) * length + a] = 1;
        // a <= b iff b is an adjacent closed point (U_b = {b-1, b, b+1} for b closed)
        if (a + 1 < length) {
            if (closed(a + 1)) m[static_cast<std::size_t>(a) * length + (a + 1)] = 1;
            if (closed(a)) m[static_cast<std::size_t>(a + 1) * length + a] = 1;
        }
    }
    return Cots{length, closed_parity, FiniteSpace(length, std::move(m))};
}

FiniteSpace marcus_wyse_space(const PlaneSpec& s) {
    const int n = s.width * s.height;
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    auto id = [&](int i, int j) { return i * s.height + j; };
    auto closed = [&](int i, int j) { return (i + j) % 2 == s.mw_closed_parity; };
    static const int di[] = {1, -1, 0, 0};
    static const int dj[] = {0, 0, 1, -1};
    for (int i = 0; i < s.width; ++i)
        for (int j = 0; j < s.height; ++j) {
            m[static_cast<std::size_t>(id(i, j)) * n + id(i, j)] = 1;
            if (!closed(i, j)) continue;
            for (int k = 0; k < 4; ++k) {
                const int ni = i + di[k], nj = j + dj[k];
                if (ni >= 0 && ni < s.width && nj >= 0 && nj < s.height)
                    m[static_cast<std::size_t>(id(ni, nj)) * n + id(i, j)] = 1;
            }
        }
    return FiniteSpace(n, std::move(m));
}

FiniteSpace build_space(const PlaneSpec& s) {
    require(s.width >= 2 && s.height >= 2, "plane dimensions must be at least 2");
    require(s.x_closed_parity == 0 || s.x_closed_parity == 1, "x parity must be 0 or 1");
    require(s.y_closed_parity == 0 || s.y_closed_parity == 1, "y parity must be 0 or 1");
    require(s.mw_closed_parity == 0 || s.mw_closed_parity == 1, "mw parity must be 0 or 1");
    if (s.topology == Topology::marcus_wyse) return marcus_wyse_space(s);
    const Cots x = make_cots_with_parity(s.width, s.x_closed_parity);
    const Cots y = make_cots_with_parity(s.height, s.y_closed_parity);
    return product(x.space, y.space);
}

}  // namespace

Cots make_cots(int length, EndpointKind index0) {
    return make_cots_with_parity(length, index0 == EndpointKind::closed_endpoint ? 0 : 1);
}

DigitalPlane::DigitalPlane(PlaneSpec spec) : spec_(spec), space_(build_space(spec)) {}

Point DigitalPlane::id(int i, int j) const {
    require(in_bounds(i, j), "coordinate out of bounds");
    return i * spec_.height + j;
}

Coord DigitalPlane::coord(Point p) const {
    require(p >= 0 && p < space_.size(), "point id out of range");
    return {p / spec_.height, p % spec_.height};
}

PointClass DigitalPlane::classify(int i, int j) const {
    require(in_bounds(i, j), "coordinate out of bounds");
    if (spec_.topology == Topology::marcus_wyse)
        return (i + j) % 2 == spec_.mw_closed_parity ? PointClass::closed_point
                                                     : PointClass::open_point;
    const bool cx = i % 2 == spec_.x_closed_parity;
    const bool cy = j % 2 == spec_.y_closed_parity;
    if (cx && cy) return PointClass::closed_point;
    if (!cx && !cy) return PointClass::open_point;
    return PointClass::mixed_point;
}

PointClass DigitalPlane::classify(Point p) const {
    const Coord c = coord(p);
    return classify(c.first, c.second);
}

bool DigitalPlane::on_border(Point p) const {
    const auto [i, j] = coord(p);
    return i == 0 || j == 0 || i == spec_.width - 1 || j == spec_.height - 1;
}

std::vector<Point> DigitalPlane::raw_border() const {
    std::vector<Point> out;
    for (Point p = 0; p < space_.size(); ++p)
        if (on_border(p)) out.push_back(p);
    return out;
}

std::vector<Point> DigitalPlane::inner_points() const {
    std::vector<Point> out;
    for (Point p = 0; p < space_.size(); ++p)
        if (!on_border(p)) out.push_back(p);
    return out;
}

std::vector<Point> DigitalPlane::adjusted_border() const {
    require(spec_.topology == Topology::khalimsky,
            "adjusted border is defined for Khalimsky planes only");
    require(spec_.width >= 3 && spec_.height >= 3,
            "adjusted border needs dimensions of at least 3");
    const int w = spec_.width, h = spec_.height;
    std::vector<Coord> walk;
    for (int i = 0; i < w - 1; ++i) walk.emplace_back(i, 0);
    for (int j = 0; j < h - 1; ++j) walk.emplace_back(w - 1, j);
    for (int i = w - 1; i > 0; --i) walk.emplace_back(i, h - 1);
    for (int j = h - 1; j > 0; --j) walk.emplace_back(0, j);

    std::vector<Point> out;
    for (const Coord& c : walk) {
        const bool corner = (c.first == 0 || c.first == w - 1) &&
                            (c.second == 0 || c.second == h - 1);
        if (corner && classify(c.first, c.second) == PointClass::mixed_point) continue;
        out.push_back(id(c));
    }
    return out;
}

PlanePtr make_plane(PlaneSpec spec) {
    return std::make_shared<const DigitalPlane>(spec);
}

char class_letter(PointClass c) {
    switch (c) {
        case PointClass::open_point: return 'O';
        case PointClass::closed_point: return 'C';
        case PointClass::mixed_point: return 'M';
    }
    return '?';
}

std::string classification_grid(const DigitalPlane& plane) {
    std::string out;
    for (int j = plane.height() - 1; j >= 0; --j) {
        for (int i = 0; i < plane.width(); ++i) out += class_letter(plane.classify(i, j));
        out += '\n';
    }
    return out;
}

}  // namespace dtop
