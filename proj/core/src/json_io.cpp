#include "dtop/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dtop {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

int int_field_or(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
    return j[key].get<int>();
}

PlaneSpec spec_from(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("plane must be a JSON object");
    PlaneSpec spec;
    spec.width = int_field(j, "width");
    spec.height = int_field(j, "height");
    std::string topo = "khalimsky";
    if (j.contains("topology")) {
        if (!j["topology"].is_string())
            throw std::invalid_argument("field \"topology\" must be a string");
        topo = j["topology"].get<std::string>();
    }
    if (topo == "khalimsky")
        spec.topology = Topology::khalimsky;
    else if (topo == "marcus_wyse")
        spec.topology = Topology::marcus_wyse;
    else
        throw std::invalid_argument("unknown topology \"" + topo + "\"");
    spec.x_closed_parity = int_field_or(j, "x_closed_parity", 0);
    spec.y_closed_parity = int_field_or(j, "y_closed_parity", 0);
    spec.mw_closed_parity = int_field_or(j, "mw_closed_parity", 0);
    return spec;
}

json spec_to(const PlaneSpec& spec) {
    json j;
    j["width"] = spec.width;
    j["height"] = spec.height;
    j["topology"] = spec.topology == Topology::khalimsky ? "khalimsky" : "marcus_wyse";
    j["x_closed_parity"] = spec.x_closed_parity;
    j["y_closed_parity"] = spec.y_closed_parity;
    j["mw_closed_parity"] = spec.mw_closed_parity;
    return j;
}

json coord_list(const std::vector<Coord>& pts) {
    json out = json::array();
    for (const Coord& c : pts) out.push_back(json::array({c.first, c.second}));
    return out;
}

std::vector<Coord> coords_from(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<Coord> out;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument(std::string(what) +
                                        " entries must be [i, j] integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json id_coords(const DigitalPlane& plane, const std::vector<Point>& pts) {
    json out = json::array();
    for (Point p : pts) {
        Coord c = plane.coord(p);
        out.push_back(json::array({c.first, c.second}));
    }
    return out;
}

}  // namespace

std::string plane_to_json(const PlaneSpec& spec) { return spec_to(spec).dump(); }

PlaneSpec plane_from_json(const std::string& text) { return spec_from(parse_text(text)); }

ParsedCurve parse_curve(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("plane") || !j.contains("points"))
        throw std::invalid_argument("curve needs \"plane\" and \"points\" fields");
    ParsedCurve out;
    out.plane = make_plane(spec_from(j["plane"]));
    out.points = coords_from(j["points"], "\"points\"");
    return out;
}

std::string curve_to_json(const JordanCurve& curve) {
    json j;
    j["plane"] = spec_to(curve.plane()->spec());
    j["points"] = coord_list(curve.points());
    return j.dump();
}

JordanCurve curve_from_json(const std::string& text) {
    ParsedCurve p = parse_curve(text);
    return JordanCurve(p.plane, p.points);
}

std::string fence_to_json(const Fence& fence) {
    require(!fence.curves.empty(), "empty fence");
    json j;
    j["plane"] = spec_to(fence.curves.front().plane()->spec());
    json curves = json::array();
    for (const JordanCurve& c : fence.curves) curves.push_back(coord_list(c.points()));
    j["curves"] = curves;
    json dirs = json::array();
    for (FenceDir d : fence.dirs) dirs.push_back(d == FenceDir::leq ? "leq" : "geq");
    j["dirs"] = dirs;
    return j.dump();
}

std::string distance_to_json(const Distance& d) {
    json j;
    if (d.is_finite())
        j["distance"] = d.value();
    else
        j["distance"] = "inf";
    return j.dump();
}

std::string geodesics_to_json(const DigitalPlane& plane,
                              const std::vector<std::vector<Point>>& arcs) {
    json out = json::array();
    for (const auto& arc : arcs) out.push_back(id_coords(plane, arc));
    return out.dump();
}

std::string space_to_json(const FiniteSpace& s) {
    json j;
    json pts = json::array();
    for (int p = 0; p < s.size(); ++p) pts.push_back(p);
    j["points"] = pts;
    json rel = json::array();
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            if (a != b && s.leq(a, b)) rel.push_back(json::array({a, b}));
    j["leq"] = rel;
    return j.dump();
}

std::string curve_space_to_json(const CurvePoset& poset) {
    json j;
    j["plane"] = spec_to(poset.plane->spec());
    json curves = json::array();
    for (const JordanCurve& c : poset.curves) curves.push_back(coord_list(c.points()));
    j["curves"] = curves;
    json rel = json::array();
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            if (a != b && poset.leq_at(a, b)) rel.push_back(json::array({a, b}));
    j["leq_pairs"] = rel;
    json covers = json::array();
    for (const auto& [a, b] : poset.covers) covers.push_back(json::array({a, b}));
    j["covers"] = covers;
    return j.dump();
}

std::string count_to_json(long long n) {
    json j;
    j["count"] = n;
    return j.dump();
}

std::string regions_to_json(const JordanCurve& curve) {
    CurveRegions r = regions(curve);
    json j;
    j["interior"] = id_coords(*curve.plane(), r.interior);
    j["exterior"] = id_coords(*curve.plane(), r.exterior);
    return j.dump();
}

std::string check_to_json(const JordanCurve& curve) {
    LemmaReport report = lemma_checks(curve);
    json j;
    j["valid"] = true;
    j["size"] = curve.size();
    j["points"] = coord_list(curve.points());
    j["interior_size"] = static_cast<int>(interior(curve).size());
    json checks = json::array();
    for (const LemmaCheck& c : report.checks) {
        json e;
        e["name"] = c.name;
        e["applicable"] = c.applicable;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["all_passed"] = report.all_passed();
    return j.dump();
}

std::string invalid_curve_json(const std::string& error) {
    json j;
    j["valid"] = false;
    j["error"] = error;
    return j.dump();
}

std::string curve_hash(const JordanCurve& curve) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](std::uint32_t v) {
        for (int k = 0; k < 4; ++k) {
            h ^= (v >> (8 * k)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    for (const Coord& c : curve.points()) {
        feed(static_cast<std::uint32_t>(c.first));
        feed(static_cast<std::uint32_t>(c.second));
    }
    std::ostringstream out;
    out << std::hex;
    for (int k = 15; k >= 0; --k) out << ((h >> (4 * k)) & 0xfU);
    return out.str();
}

std::string hasse_dot(const CurvePoset& poset) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (int k = 0; k < poset.size(); ++k)
        out << "  \"" << curve_hash(poset.curves[static_cast<std::size_t>(k)])
            << "\" [label=\"" << k << "\"];\n";
    for (const auto& [lo, hi] : poset.covers)
        out << "  \"" << curve_hash(poset.curves[static_cast<std::size_t>(hi)]) << "\" -> \""
            << curve_hash(poset.curves[static_cast<std::size_t>(lo)]) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string render_ascii(const JordanCurve& curve) {
    const DigitalPlane& pl = *curve.plane();
    std::vector<Point> inside = interior(curve);
    std::ostringstream out;
    for (int j = pl.height() - 1; j >= 0; --j) {
        for (int i = 0; i < pl.width(); ++i) {
            if (curve.contains({i, j}))
                out << class_letter(pl.classify(i, j));
            else if (std::binary_search(inside.begin(), inside.end(), pl.id(i, j)))
                out << '+';
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace dtop
