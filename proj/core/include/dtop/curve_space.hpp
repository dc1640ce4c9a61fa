#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dtop/homotopy.hpp"
#include "dtop/jordan.hpp"

namespace dtop {

/// The set of all Jordan curves of one plane, ordered by curve_leq.
///
/// The stored relation is the transitive closure of the pairwise relation;
/// closure_added counts the ordered pairs the closure had to add, so any
/// failure of transitivity in the raw relation is visible as data.
struct CurvePoset {
    PlanePtr plane;
    std::vector<JordanCurve> curves;          // canonical, sorted by key
    std::vector<std::uint8_t> leq;            // n*n, row-major, closed relation
    std::vector<std::pair<int, int>> covers;  // (a, b): a < b with nothing between
    int closure_added = 0;

    int size() const { return static_cast<int>(curves.size()); }
    bool leq_at(int a, int b) const {
        return leq[static_cast<std::size_t>(a) * curves.size() + b] != 0;
    }
    /// Index of an equal curve, or -1.
    int index_of(const JordanCurve& c) const;
    /// The poset as a finite space (curve k becomes point k).
    FiniteSpace as_space() const;
};

/// All Jordan curves of the plane: every chordless cycle of length >= 4 in
/// the comparability graph, canonical, sorted by key, duplicate-free.
/// Throws std::invalid_argument past the 12x12 enumeration cap.
std::vector<JordanCurve> enumerate_curves(PlanePtr plane);

/// Pairwise order, transitive closure, Hasse covers. Antisymmetry of the
/// closed relation is asserted.
CurvePoset build_poset(PlanePtr plane, std::vector<JordanCurve> curves);

/// enumerate_curves + build_poset.
CurvePoset curve_poset(PlanePtr plane);

struct Extremals {
    std::vector<int> maximal;
    std::vector<int> minimal;
};

Extremals extremal_elements(const CurvePoset& poset);

struct SpaceReport {
    int curves = 0;
    int strict_pairs = 0;  // ordered pairs a < b in the closed relation
    int covers = 0;
    int closure_added = 0;
    int maximal = 0;
    int minimal = 0;
    bool connected = false;
    int core_size = 0;
    bool contractible = false;
    int height = 0;  // longest chain, in cover steps
    /// Curves without open points are maximal, curves without closed
    /// points are minimal; these hold in every observed space.
    bool extremal_by_class = false;
    /// Converse observations (not a theorem): extremal curves that do
    /// carry points of the other class.
    int maximal_with_open = 0;
    int minimal_with_closed = 0;
};

SpaceReport space_report(const CurvePoset& poset);

/// The subspace of minimal curves A(p), one per inner point, with the
/// verified order isomorphism A(p) -> p onto the DUAL of the inner plane.
struct MinimalCurveSpace {
    CurvePoset poset;
    std::vector<Coord> centers;  // centers[k] is the interior of curves[k]
    bool iso_verified = false;
};

MinimalCurveSpace minimal_curve_space(PlanePtr plane);

/// Simple cycles in the (n+1)x(n+1) grid graph. 0 <= n <= 5.
long long count_grid_cycles(int n);

/// |J(3 x n plane)| where the length-3 side has the given endpoint kind.
/// n in [3, 12].
long long count_3xn(int n, EndpointKind side3);

}  // namespace dtop
