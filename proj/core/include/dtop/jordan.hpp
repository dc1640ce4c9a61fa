#pragma once

#include <string>
#include <vector>

#include "dtop/paths.hpp"
#include "dtop/plane.hpp"

namespace dtop {

/// Digital Jordan curve: at least four points whose induced comparability
/// graph is a single chordless cycle. Equivalently, removing any one point
/// leaves a COTS-arc.
///
/// Stored canonically: the lexicographically smallest coordinate sequence
/// over all rotations and both directions of the cycle.
class JordanCurve {
public:
    /// Accepts the curve's point set in any order (a cyclic order, rotated
    /// or reflected, or no particular order at all); validates and
    /// canonicalizes. Throws std::invalid_argument when the set is not a
    /// Jordan curve.
    JordanCurve(PlanePtr plane, const std::vector<Coord>& points);

    const PlanePtr& plane() const { return plane_; }
    const std::vector<Coord>& points() const { return pts_; }
    int size() const { return static_cast<int>(pts_.size()); }

    std::vector<Point> ids() const;
    bool contains(Coord c) const;

    /// Cyclic order starting at the lexicographically smallest point,
    /// oriented clockwise (negative signed polygon area).
    std::vector<Coord> clockwise() const;

    /// Canonical identity string, usable as a sort key.
    std::string key() const;

    bool operator==(const JordanCurve& o) const {
        return plane_->spec() == o.plane_->spec() && pts_ == o.pts_;
    }

private:
    PlanePtr plane_;
    std::vector<Coord> pts_;
};

/// Chordless-cycle characterization: |set| >= 4, induced comparability
/// graph connected with every degree exactly 2.
bool is_jordan_curve(const DigitalPlane& plane, const std::vector<Point>& pts);
bool is_jordan_curve(const DigitalPlane& plane, const std::vector<Coord>& pts);

/// Definitional characterization: |set| >= 4 and deleting any single point
/// leaves a set whose induced comparability graph is a simple path.
bool is_jordan_curve_by_deletion(const DigitalPlane& plane, const std::vector<Point>& pts);

std::vector<Coord> cyclic_order(const JordanCurve& curve);

struct CurveRegions {
    std::vector<Point> interior;
    std::vector<Point> exterior;
};

/// Complement components: those containing a raw-border point form the
/// exterior, the rest the interior.
CurveRegions regions(const JordanCurve& curve);
std::vector<Point> interior(const JordanCurve& curve);

/// A(p) as a curve; fails when the adjacency set does not form one (point
/// too close to the border, or a Marcus-Wyse plane, where adjacency sets
/// are discrete).
JordanCurve minimal_curve(PlanePtr plane, Coord p);

bool is_minimal(const JordanCurve& curve);

struct LemmaCheck {
    std::string name;
    bool applicable = false;
    bool passed = true;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;
    bool all_passed() const;
};

/// Structural facts about one curve, each checked directly:
/// even size, region partition, two complement components (border-avoiding
/// curves), pure and mixed interior points (non-minimal curves), odd
/// components of A(p) meet J for pure interior p, arc/complement component
/// counts, and connectivity plus size bounds at maximal interior distance.
LemmaReport lemma_checks(const JordanCurve& curve);

}  // namespace dtop
