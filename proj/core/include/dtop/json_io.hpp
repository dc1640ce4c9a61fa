#pragma once

#include <string>
#include <vector>

#include "dtop/curve_space.hpp"
#include "dtop/homotopy.hpp"

namespace dtop {

/// Serialization is deterministic: object keys are emitted in sorted order
/// and all structural lists are canonically ordered, so equal inputs give
/// byte-identical output. Parsers throw std::invalid_argument on malformed
/// text or wrong shapes.

std::string plane_to_json(const PlaneSpec& spec);
PlaneSpec plane_from_json(const std::string& text);

struct ParsedCurve {
    PlanePtr plane;
    std::vector<Coord> points;
};

/// Reads {"plane":{...},"points":[[i,j],...]} without validating that the
/// points form a curve.
ParsedCurve parse_curve(const std::string& text);

std::string curve_to_json(const JordanCurve& curve);
/// parse_curve + curve validation.
JordanCurve curve_from_json(const std::string& text);

std::string fence_to_json(const Fence& fence);

std::string distance_to_json(const Distance& d);

std::string geodesics_to_json(const DigitalPlane& plane,
                              const std::vector<std::vector<Point>>& arcs);

/// {"points":[id...],"leq":[[a,b]...]}; non-reflexive pairs only.
std::string space_to_json(const FiniteSpace& s);

/// {"plane":{...},"curves":[...],"leq_pairs":[[a,b],...],"covers":[[a,b],...]}.
std::string curve_space_to_json(const CurvePoset& poset);

std::string count_to_json(long long n);

std::string regions_to_json(const JordanCurve& curve);

/// Validity plus the lemma report.
std::string check_to_json(const JordanCurve& curve);

/// {"error": reason, "valid": false} for point sets that are not curves.
std::string invalid_curve_json(const std::string& error);

/// 64-bit FNV-1a over the canonical point sequence, as 16 hex digits.
std::string curve_hash(const JordanCurve& curve);

/// DOT digraph; node id = curve hash, label = index, edges drawn from the
/// greater curve down to the lesser.
std::string hasse_dot(const CurvePoset& poset);

/// One line per row, top row first: curve points as their class letter,
/// interior points '+', everything else '.'.
std::string render_ascii(const JordanCurve& curve);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dtop
