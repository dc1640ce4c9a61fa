#include <algorithm>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "dtop/acceptance.hpp"
#include "dtop/curve_space.hpp"
#include "dtop/homotopy.hpp"
#include "dtop/json_io.hpp"

namespace {

using namespace dtop;

struct PlaneOpts {
    std::string file;
    std::string literal;
    int width = 0;
    int height = 0;
    std::string topology = "khalimsky";
    int x_parity = 0;
    int y_parity = 0;
    int mw_parity = 0;
};

void add_plane_opts(CLI::App* cmd, PlaneOpts& o) {
    cmd->add_option("--plane-file", o.file, "read the plane from a JSON file");
    cmd->add_option("--plane", o.literal, "plane as a JSON literal");
    cmd->add_option("--width", o.width, "plane width");
    cmd->add_option("--height", o.height, "plane height");
    cmd->add_option("--topology", o.topology, "khalimsky or marcus_wyse");
    cmd->add_option("--x-parity", o.x_parity, "x index parity that is closed (0 or 1)");
    cmd->add_option("--y-parity", o.y_parity, "y index parity that is closed (0 or 1)");
    cmd->add_option("--mw-parity", o.mw_parity, "i+j parity that is closed (0 or 1)");
}

PlanePtr resolve_plane(const PlaneOpts& o) {
    if (!o.file.empty()) return make_plane(plane_from_json(read_file(o.file)));
    if (!o.literal.empty()) return make_plane(plane_from_json(o.literal));
    if (o.width <= 0 || o.height <= 0)
        throw std::invalid_argument("plane needed: --plane-file, --plane, or --width/--height");
    PlaneSpec spec;
    spec.width = o.width;
    spec.height = o.height;
    if (o.topology == "khalimsky")
        spec.topology = Topology::khalimsky;
    else if (o.topology == "marcus_wyse")
        spec.topology = Topology::marcus_wyse;
    else
        throw std::invalid_argument("unknown topology \"" + o.topology + "\"");
    spec.x_closed_parity = o.x_parity;
    spec.y_closed_parity = o.y_parity;
    spec.mw_closed_parity = o.mw_parity;
    return make_plane(spec);
}

Coord parse_coord(const std::string& s) {
    try {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        int i = std::stoi(s.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        std::string rest = s.substr(comma + 1);
        int j = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        return {i, j};
    } catch (const std::exception&) {
        throw std::invalid_argument("coordinate must look like i,j: \"" + s + "\"");
    }
}

/// Writes to --out or stdout, normalizing to exactly one trailing newline.
void emit(const std::string& out_path, std::string content) {
    if (content.empty() || content.back() != '\n') content.push_back('\n');
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_file(out_path, content);
}

JordanCurve load_curve(const std::string& path) { return curve_from_json(read_file(path)); }

int run_verify() {
    auto results = run_acceptance();
    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        all = all && r.passed;
        total += r.seconds;
        std::printf("%2d  %s  %-34s  %s\n", r.index, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        std::fprintf(stderr, "%2d  %8.2fs  %s\n", r.index, r.seconds, r.name.c_str());
    }
    std::printf("%s\n", all ? "all criteria passed" : "FAILURES present");
    std::fprintf(stderr, "total %.2fs\n", total);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital topology toolkit: Khalimsky planes, Jordan curves, curve spaces"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    int exit_code = 0;

    // plane info
    auto* plane_cmd = app.add_subcommand("plane", "plane inspection");
    plane_cmd->require_subcommand(1);
    auto* info_cmd = plane_cmd->add_subcommand("info", "print the point classification grid");
    PlaneOpts info_plane;
    std::string info_format = "ascii";
    add_plane_opts(info_cmd, info_plane);
    info_cmd->add_option("--format", info_format, "ascii or json");
    info_cmd->callback([&] {
        PlanePtr plane = resolve_plane(info_plane);
        if (info_format == "ascii")
            emit(out_path, classification_grid(*plane));
        else if (info_format == "json")
            emit(out_path, plane_to_json(plane->spec()));
        else
            throw std::invalid_argument("plane info supports --format ascii|json");
    });

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list every Jordan curve of a plane");
    PlaneOpts enum_plane;
    std::string enum_format = "json";
    add_plane_opts(enum_cmd, enum_plane);
    enum_cmd->add_option("--format", enum_format, "json (full space dump) or count");
    enum_cmd->callback([&] {
        PlanePtr plane = resolve_plane(enum_plane);
        if (enum_format == "count")
            emit(out_path, count_to_json(static_cast<long long>(enumerate_curves(plane).size())));
        else if (enum_format == "json")
            emit(out_path, curve_space_to_json(curve_poset(plane)));
        else
            throw std::invalid_argument("enumerate supports --format json|count");
    });

    // hasse
    auto* hasse_cmd = app.add_subcommand("hasse", "curve-space Hasse diagram as DOT");
    PlaneOpts hasse_plane;
    std::string hasse_format = "dot";
    add_plane_opts(hasse_cmd, hasse_plane);
    hasse_cmd->add_option("--format", hasse_format, "dot");
    hasse_cmd->callback([&] {
        if (hasse_format != "dot") throw std::invalid_argument("hasse supports --format dot");
        emit(out_path, hasse_dot(curve_poset(resolve_plane(hasse_plane))));
    });

    // check
    auto* check_cmd = app.add_subcommand("check", "validate a curve and run its structure checks");
    std::string check_file;
    check_cmd->add_option("curve", check_file, "curve JSON file")->required();
    check_cmd->callback([&] {
        ParsedCurve parsed = parse_curve(read_file(check_file));
        try {
            JordanCurve curve(parsed.plane, parsed.points);
            emit(out_path, check_to_json(curve));
        } catch (const std::invalid_argument& e) {
            emit(out_path, invalid_curve_json(e.what()));
        }
    });

    // interior
    auto* interior_cmd = app.add_subcommand("interior", "interior and exterior of a curve");
    std::string interior_file;
    interior_cmd->add_option("curve", interior_file, "curve JSON file")->required();
    interior_cmd->callback([&] { emit(out_path, regions_to_json(load_curve(interior_file))); });

    // render
    auto* render_cmd = app.add_subcommand("render", "ASCII picture of a curve");
    std::string render_file;
    render_cmd->add_option("curve", render_file, "curve JSON file")->required();
    render_cmd->callback([&] { emit(out_path, render_ascii(load_curve(render_file))); });

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "COTS-distance between two points");
    PlaneOpts dist_plane;
    std::string dist_from, dist_to, dist_within;
    add_plane_opts(dist_cmd, dist_plane);
    dist_cmd->add_option("--from", dist_from, "start point i,j")->required();
    dist_cmd->add_option("--to", dist_to, "end point i,j")->required();
    dist_cmd->add_option("--within", dist_within, "restrict to the points of this curve (JSON file)");
    dist_cmd->callback([&] {
        Coord a = parse_coord(dist_from);
        Coord b = parse_coord(dist_to);
        if (!dist_within.empty()) {
            JordanCurve curve = load_curve(dist_within);
            PlanePtr plane = curve.plane();
            if (!plane->in_bounds(a.first, a.second) || !plane->in_bounds(b.first, b.second))
                throw std::invalid_argument("point out of bounds");
            std::vector<Point> ids = curve.ids();
            std::sort(ids.begin(), ids.end());
            Subspace sub(plane->space(), ids);
            if (!sub.contains(plane->id(a)) || !sub.contains(plane->id(b)))
                throw std::invalid_argument("point not on the curve");
            emit(out_path, distance_to_json(distance(sub, plane->id(a), plane->id(b))));
            return;
        }
        PlanePtr plane = resolve_plane(dist_plane);
        if (!plane->in_bounds(a.first, a.second) || !plane->in_bounds(b.first, b.second))
            throw std::invalid_argument("point out of bounds");
        emit(out_path, distance_to_json(distance(plane->space(), plane->id(a), plane->id(b))));
    });

    // geodesics
    auto* geo_cmd = app.add_subcommand("geodesics", "all shortest arcs between two points");
    PlaneOpts geo_plane;
    std::string geo_from, geo_to, geo_within;
    add_plane_opts(geo_cmd, geo_plane);
    geo_cmd->add_option("--from", geo_from, "start point i,j")->required();
    geo_cmd->add_option("--to", geo_to, "end point i,j")->required();
    geo_cmd->add_option("--within", geo_within, "restrict to the points of this curve (JSON file)");
    geo_cmd->callback([&] {
        Coord a = parse_coord(geo_from);
        Coord b = parse_coord(geo_to);
        PlanePtr plane;
        std::vector<std::vector<Point>> arcs;
        if (!geo_within.empty()) {
            JordanCurve curve = load_curve(geo_within);
            plane = curve.plane();
            if (!plane->in_bounds(a.first, a.second) || !plane->in_bounds(b.first, b.second))
                throw std::invalid_argument("point out of bounds");
            std::vector<Point> ids = curve.ids();
            std::sort(ids.begin(), ids.end());
            Subspace sub(plane->space(), ids);
            if (!sub.contains(plane->id(a)) || !sub.contains(plane->id(b)))
                throw std::invalid_argument("point not on the curve");
            arcs = geodesics(sub, plane->id(a), plane->id(b));
        } else {
            plane = resolve_plane(geo_plane);
            if (!plane->in_bounds(a.first, a.second) || !plane->in_bounds(b.first, b.second))
                throw std::invalid_argument("point out of bounds");
            arcs = geodesics(plane->space(), plane->id(a), plane->id(b));
        }
        if (arcs.empty()) std::fprintf(stderr, "points are unreachable from each other\n");
        emit(out_path, geodesics_to_json(*plane, arcs));
    });

    // minimalize
    auto* mini_cmd = app.add_subcommand("minimalize", "shrink a curve to a minimal one");
    std::string mini_file, mini_basepoint;
    mini_cmd->add_option("curve", mini_file, "curve JSON file")->required();
    mini_cmd->add_option("--basepoint", mini_basepoint, "interior point i,j to keep");
    mini_cmd->callback([&] {
        JordanCurve curve = load_curve(mini_file);
        Fence fence = mini_basepoint.empty() ? minimalize(curve)
                                             : minimalize(curve, parse_coord(mini_basepoint));
        emit(out_path, fence_to_json(fence));
    });

    // morph
    auto* morph_cmd = app.add_subcommand("morph", "fence of curves joining two curves");
    std::string morph_from, morph_to, morph_render;
    morph_cmd->add_option("from", morph_from, "start curve JSON file")->required();
    morph_cmd->add_option("to", morph_to, "end curve JSON file")->required();
    morph_cmd->add_option("--render", morph_render, "ascii: print frames instead of JSON");
    morph_cmd->callback([&] {
        Fence fence = morph(load_curve(morph_from), load_curve(morph_to));
        if (morph_render.empty()) {
            emit(out_path, fence_to_json(fence));
            return;
        }
        if (morph_render != "ascii") throw std::invalid_argument("morph supports --render ascii");
        std::string frames;
        for (std::size_t k = 0; k < fence.curves.size(); ++k) {
            if (k) frames += "\n";
            frames += render_ascii(fence.curves[k]);
        }
        emit(out_path, frames);
    });

    // grid-cycles
    auto* grid_cmd = app.add_subcommand("grid-cycles", "simple cycles in an (n+1)x(n+1) grid graph");
    int grid_n = -1;
    grid_cmd->add_option("n", grid_n, "grid parameter, 0..5")->required();
    grid_cmd->callback([&] { emit(out_path, count_to_json(count_grid_cycles(grid_n))); });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the full self-check suite");
    verify_cmd->callback([&] { exit_code = run_verify(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return exit_code;
}
