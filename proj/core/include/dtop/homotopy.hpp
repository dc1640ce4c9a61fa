#pragma once

#include <optional>
#include <vector>

#include "dtop/jordan.hpp"

namespace dtop {

enum class CellKind { open_interval, closed_interval };

struct Cell {
    Coord point;
    CellKind kind;
    bool operator==(const Cell&) const = default;
};

/// Standard parameterization of a curve by the digital circle: one cell per
/// curve point, clockwise, where a point's preimage is a closed interval
/// exactly when the point is relatively closed in the curve subspace.
/// Kinds therefore alternate around the cycle.
struct Parameterization {
    std::vector<Cell> cells;
    bool operator==(const Parameterization&) const = default;
};

Parameterization standard_parameterization(const JordanCurve& curve);

/// The pointwise order on curves: J <= K when standard parameterizations
/// f of J and g of K exist with f(s) <= g(s) at every instant. Decided by
/// a product automaton over both cell sequences; the simultaneous-advance
/// transition also requires owner(J) <= owner(K), where the owner of a
/// transition is the closed-interval member of its cell pair (closed cells
/// own their boundary instants).
bool curve_leq(const JordanCurve& J, const JordanCurve& K);

enum class FenceDir { leq, geq };

/// A path in curve space: consecutive curves comparable in the recorded
/// direction. dirs[i] == leq means curves[i] <= curves[i+1].
struct Fence {
    std::vector<JordanCurve> curves;
    std::vector<FenceDir> dirs;
};

/// Recomputes every consecutive comparability.
bool validate_fence(const Fence& fence);

struct ShrinkResult {
    JordanCurve curve;
    Parameterization param;
    Coord basepoint;
    std::optional<Coord> removed;  // set when a point actually left the interior
};

/// One morphing step: picks the interior point q farthest from the
/// basepoint within the interior subspace (pure preferred, then smallest
/// (i, j)), replaces the middle of A(q) meet J by q itself, and returns the
/// shrunk curve whose interior is int(J) - {q}. Identity on minimal curves.
ShrinkResult shrink(const JordanCurve& J, const Parameterization& f, Coord basepoint);

/// Iterated shrink down to a minimal curve; the fence starts at J and ends
/// at the adjacency-set curve around the basepoint. The default basepoint
/// is the lexicographically smallest pure interior point.
Fence minimalize(const JordanCurve& J);
Fence minimalize(const JordanCurve& J, Coord basepoint);

/// Fence of minimal curves A(c0), A(c1), ..., following a shortest fence of
/// centers from p to q through the plane's inner points.
Fence minimal_path(PlanePtr plane, Coord p, Coord q);

/// Full morph: minimalize J, walk minimal curves to the other center, then
/// replay K's minimalization backwards. morph(J, J) is the one-curve fence.
Fence morph(const JordanCurve& J, const JordanCurve& K);

}  // namespace dtop
