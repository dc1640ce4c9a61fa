#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dtop/finite_space.hpp"

namespace dtop {

enum class PointClass { open_point, closed_point, mixed_point };
enum class Topology { khalimsky, marcus_wyse };
enum class EndpointKind { open_endpoint, closed_endpoint };

/// Lattice position (i, j): column i, row j, origin at the lower left.
using Coord = std::pair<int, int>;

/// Finite COTS: the digital model of a line segment. Points alternate
/// open/closed along the index; index i is closed iff i % 2 == closed_parity.
struct Cots {
    int length;
    int closed_parity;
    FiniteSpace space;

    bool closed_at(int i) const { return i % 2 == closed_parity; }
};

Cots make_cots(int length, EndpointKind index0);

struct PlaneSpec {
    int width = 0;
    int height = 0;
    Topology topology = Topology::khalimsky;
    int x_closed_parity = 0;
    int y_closed_parity = 0;
    int mw_closed_parity = 0;

    bool operator==(const PlaneSpec&) const = default;
};

/// Rectangular digital plane. A Khalimsky plane is exactly the product of
/// two COTS; a Marcus-Wyse plane is the T_1/2 space whose closed points are
/// the lattice points with i + j == mw_closed_parity mod 2.
class DigitalPlane {
public:
    explicit DigitalPlane(PlaneSpec spec);

    const PlaneSpec& spec() const { return spec_; }
    int width() const { return spec_.width; }
    int height() const { return spec_.height; }
    const FiniteSpace& space() const { return space_; }

    bool in_bounds(int i, int j) const {
        return i >= 0 && i < spec_.width && j >= 0 && j < spec_.height;
    }
    Point id(int i, int j) const;
    Point id(Coord c) const { return id(c.first, c.second); }
    Coord coord(Point p) const;

    PointClass classify(int i, int j) const;
    PointClass classify(Point p) const;
    bool pure(Point p) const { return classify(p) != PointClass::mixed_point; }

    bool on_border(Point p) const;
    /// All lattice positions on the rectangle boundary, sorted by id.
    std::vector<Point> raw_border() const;
    /// Lattice positions off the boundary, sorted by id.
    std::vector<Point> inner_points() const;

    /// Border with mixed cornerpoints deleted, as a cyclic point sequence.
    /// Khalimsky only; needs width, height >= 3.
    std::vector<Point> adjusted_border() const;

private:
    PlaneSpec spec_;
    FiniteSpace space_;
};

using PlanePtr = std::shared_ptr<const DigitalPlane>;

PlanePtr make_plane(PlaneSpec spec);

char class_letter(PointClass c);

/// Classification grid, one row per line, top row first (row j = height-1).
std::string classification_grid(const DigitalPlane& plane);

}  // namespace dtop
