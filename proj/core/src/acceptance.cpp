#include "dtop/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "dtop/curve_space.hpp"
#include "dtop/homotopy.hpp"
#include "dtop/json_io.hpp"

namespace dtop {

namespace {

struct Tally {
    bool ok = true;
    long long checks = 0;
    std::string first;
    std::ostringstream summary;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first = what;
        }
    }
};

PlanePtr khal(int w, int h, int px, int py) {
    PlaneSpec spec;
    spec.width = w;
    spec.height = h;
    spec.topology = Topology::khalimsky;
    spec.x_closed_parity = px;
    spec.y_closed_parity = py;
    return make_plane(spec);
}

PlanePtr mw(int w, int h, int parity) {
    PlaneSpec spec;
    spec.width = w;
    spec.height = h;
    spec.topology = Topology::marcus_wyse;
    spec.mw_closed_parity = parity;
    return make_plane(spec);
}

bool subset_sorted(const std::vector<Point>& a, const std::vector<Point>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------- 1

void crit_4x4(Tally& t) {
    PlanePtr plane = khal(4, 4, 0, 0);
    CurvePoset poset = curve_poset(plane);
    t.expect(poset.size() == 11, "4x4 must hold 11 curves, got " + std::to_string(poset.size()));
    Extremals ext = extremal_elements(poset);
    t.expect(ext.maximal.size() == 1,
             "4x4 must have a unique maximal curve, got " + std::to_string(ext.maximal.size()));
    SpaceReport rep = space_report(poset);
    t.expect(rep.core_size == 1, "4x4 curve space core must be one point");
    t.expect(rep.contractible, "4x4 curve space must be contractible");
    t.expect(rep.connected, "4x4 curve space must be connected");
    t.summary << poset.size() << " curves, " << ext.maximal.size() << " maximal, core "
              << rep.core_size;
}

// ---------------------------------------------------------------- 2

void crit_5x5(Tally& t) {
    PlanePtr plane = khal(5, 5, 1, 1);
    CurvePoset poset = curve_poset(plane);
    t.expect(poset.size() == 87, "5x5 must hold 87 curves, got " + std::to_string(poset.size()));
    Extremals ext = extremal_elements(poset);
    t.expect(ext.maximal.size() == 1,
             "5x5 must have 1 maximal curve, got " + std::to_string(ext.maximal.size()));
    t.expect(ext.minimal.size() == 13,
             "5x5 must have 13 minimal curves, got " + std::to_string(ext.minimal.size()));
    int below_top = 0;
    if (ext.maximal.size() == 1)
        for (const auto& [lo, hi] : poset.covers)
            if (hi == ext.maximal.front()) ++below_top;
    t.expect(below_top == 4,
             "5x5 maximal curve must have 4 lower covers, got " + std::to_string(below_top));
    SpaceReport rep = space_report(poset);
    t.expect(rep.connected, "5x5 curve space must be connected");
    t.expect(rep.contractible, "5x5 curve space must be contractible");
    t.summary << poset.size() << " curves, " << ext.minimal.size() << " minimal, top covers "
              << below_top << ", core " << rep.core_size;
}

// ---------------------------------------------------------------- 3

void crit_3xn(Tally& t) {
    std::ostringstream flagged;
    for (int n = 3; n <= 12; ++n) {
        long long want = static_cast<long long>(n - 1) * (n - 2) / 2;
        long long closed_side = count_3xn(n, EndpointKind::closed_endpoint);
        t.expect(closed_side == want, "3x" + std::to_string(n) + " closed-side count " +
                                          std::to_string(closed_side) + " != " +
                                          std::to_string(want));
        long long open_side = count_3xn(n, EndpointKind::open_endpoint);
        if (open_side != want)
            flagged << " 3x" << n << ":open=" << open_side << "(formula " << want << ")";
    }
    t.summary << "closed-side counts match (n-1)(n-2)/2 for n=3..12";
    if (flagged.str().empty())
        t.summary << "; open-side matches too";
    else
        t.summary << "; open-side flagged:" << flagged.str();
}

// ---------------------------------------------------------------- 4

void crit_metric(Tally& t) {
    PlanePtr plane = khal(9, 9, 0, 0);
    const FiniteSpace& sp = plane->space();
    const int n = sp.size();

    std::vector<std::vector<int>> d(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto& row = d[static_cast<std::size_t>(s)];
        row.assign(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{s};
        row[static_cast<std::size_t>(s)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : sp.adjacency(queue[head]))
                if (row[static_cast<std::size_t>(w)] < 0) {
                    row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(queue[head])] + 1;
                    queue.push_back(w);
                }
    }

    // The library's distance must agree with plain breadth-first search.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Distance lib = distance(sp, a, b);
            t.expect(lib.is_finite() && lib.value() == d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                     "distance mismatch with reference search");
        }

    // Metric axioms, exhaustively.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            t.expect((ab == 0) == (a == b), "identity axiom");
            t.expect(ab == d[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)], "symmetry axiom");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                t.expect(d[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] <=
                             d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                                 d[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)],
                         "triangle inequality");

    auto cheb = [&](Point a, Point b) {
        Coord ca = plane->coord(a), cb = plane->coord(b);
        return std::max(std::abs(ca.first - cb.first), std::abs(ca.second - cb.second));
    };

    // Pure pairs realize the Chebyshev value; any pair is bounded below by it
    // when one end is pure.
    for (int a = 0; a < n; ++a) {
        if (!plane->pure(a)) continue;
        for (int b = 0; b < n; ++b) {
            if (plane->pure(b))
                t.expect(d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == cheb(a, b),
                         "pure-pure distance must be the Chebyshev value");
            t.expect(d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= cheb(a, b),
                     "distance below the coordinate gap");
        }
    }

    // From a pure point, open and closed points never share a distance.
    for (int a = 0; a < n; ++a) {
        if (!plane->pure(a)) continue;
        std::vector<char> to_open(64, 0), to_closed(64, 0);
        for (int b = 0; b < n; ++b) {
            PointClass cls = plane->classify(b);
            int v = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (cls == PointClass::open_point) to_open[static_cast<std::size_t>(v)] = 1;
            if (cls == PointClass::closed_point) to_closed[static_cast<std::size_t>(v)] = 1;
        }
        for (int v = 0; v < 64; ++v)
            t.expect(!(to_open[static_cast<std::size_t>(v)] && to_closed[static_cast<std::size_t>(v)]),
                     "open and closed points at one distance from a pure point");
    }

    // Geodesics: valid arcs, right length, unit distance steps both ways;
    // a unique diagonal geodesic between same-diagonal pure pairs.
    long long arcs_seen = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto arcs = geodesics(sp, a, b);
            t.expect(!arcs.empty(), "geodesics missing for a connected pair");
            int len = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            for (const auto& arc : arcs) {
                ++arcs_seen;
                t.expect(static_cast<int>(arc.size()) == len + 1, "geodesic of wrong length");
                t.expect(is_cots_arc(sp, arc), "geodesic is not an arc");
                bool steps = true;
                for (std::size_t k = 0; k < arc.size(); ++k) {
                    if (d[static_cast<std::size_t>(a)][static_cast<std::size_t>(arc[k])] != static_cast<int>(k))
                        steps = false;
                    if (d[static_cast<std::size_t>(b)][static_cast<std::size_t>(arc[k])] !=
                        len - static_cast<int>(k))
                        steps = false;
                }
                t.expect(steps, "geodesic point at the wrong running distance");
            }
            Coord ca = plane->coord(a), cb = plane->coord(b);
            bool diagonal = plane->pure(a) && plane->pure(b) &&
                            std::abs(ca.first - cb.first) == std::abs(ca.second - cb.second);
            if (diagonal) {
                t.expect(arcs.size() == 1, "same-diagonal pure pair with several geodesics");
                int si = cb.first > ca.first ? 1 : -1;
                int sj = cb.second > ca.second ? 1 : -1;
                for (const auto& arc : arcs)
                    for (std::size_t k = 0; k < arc.size(); ++k) {
                        Coord c = plane->coord(arc[k]);
                        t.expect(c.first == ca.first + si * static_cast<int>(k) &&
                                     c.second == ca.second + sj * static_cast<int>(k),
                                 "diagonal geodesic leaves the diagonal");
                    }
            }
        }

    t.summary << n << " points, diameter " << diameter(sp).str() << ", " << arcs_seen
              << " geodesic arcs checked";
}

// ---------------------------------------------------------------- 5

void crit_shrink(Tally& t) {
    PlanePtr plane = khal(5, 5, 1, 1);
    const FiniteSpace& sp = plane->space();
    auto curves = enumerate_curves(plane);
    t.expect(curves.size() == 87, "expected the 87 curves");
    long long steps = 0;
    for (const JordanCurve& J : curves) {
        Fence fence = minimalize(J);
        t.expect(fence.curves.front() == J, "fence must start at the input curve");
        t.expect(validate_fence(fence), "minimalize fence must validate");

        std::vector<Point> first_inside = interior(J);
        Coord basepoint{-1, -1};
        if (first_inside.size() == 1) {
            basepoint = plane->coord(first_inside.front());
            t.expect(fence.curves.size() == 1, "minimal curve must minimalize to itself");
        } else {
            for (Point x : first_inside)
                if (plane->pure(x)) {
                    basepoint = plane->coord(x);
                    break;
                }
            t.expect(basepoint.first >= 0, "no pure interior point on a non-minimal curve");
        }

        for (std::size_t k = 0; k + 1 < fence.curves.size(); ++k) {
            ++steps;
            const JordanCurve& prev = fence.curves[k];
            const JordanCurve& next = fence.curves[k + 1];
            t.expect(is_jordan_curve_by_deletion(*plane, next.ids()),
                     "step output fails the deletion definition");
            std::vector<Point> pi = interior(prev);
            std::vector<Point> ni = interior(next);
            t.expect(ni.size() + 1 == pi.size(), "interior must shrink by one point");
            std::vector<Point> gone;
            std::set_difference(pi.begin(), pi.end(), ni.begin(), ni.end(),
                                std::back_inserter(gone));
            t.expect(gone.size() == 1, "exactly one point must leave the interior");
            if (gone.size() != 1) continue;
            Point q = gone.front();

            const auto& adj = sp.adjacency(q);
            std::vector<Point> trace;
            for (Point c : prev.ids())
                if (std::binary_search(adj.begin(), adj.end(), c)) trace.push_back(c);
            std::sort(trace.begin(), trace.end());
            t.expect(!trace.empty(), "removed point must touch the curve");
            t.expect(trace.size() < adj.size(), "trace must be a proper part of the adjacency set");
            t.expect(trace.size() % 2 == 1 && trace.size() >= 3,
                     "trace must be odd of size at least 3");
            t.expect(is_connected(Subspace(sp, trace)), "trace must be connected");
            t.expect(is_weak_point(Subspace(sp, pi), q),
                     "removed point must be weak in the old interior");
            t.expect(curve_leq(prev, next) || curve_leq(next, prev),
                     "consecutive curves must be comparable");
        }

        const JordanCurve& last = fence.curves.back();
        std::vector<Point> raw_last = interior(last);
        t.expect(raw_last.size() == 1, "fence must end at a minimal curve");
        t.expect(raw_last.size() == 1 && plane->coord(raw_last.front()) == basepoint,
                 "fence must end around the basepoint");
    }
    t.summary << curves.size() << " curves minimalized, " << steps << " shrink steps checked";
}

// ---------------------------------------------------------------- 6

void crit_morph(Tally& t) {
    PlanePtr plane = khal(5, 5, 1, 1);
    auto curves = enumerate_curves(plane);
    t.expect(curves.size() == 87, "expected the 87 curves");
    long long fences = 0, longest = 0;
    for (const JordanCurve& a : curves)
        for (const JordanCurve& b : curves) {
            Fence f = morph(a, b);
            ++fences;
            longest = std::max<long long>(longest, static_cast<long long>(f.curves.size()));
            t.expect(f.curves.front() == a, "morph must start at the first curve");
            t.expect(f.curves.back() == b, "morph must end at the second curve");
            t.expect(validate_fence(f), "morph fence must validate");
            if (!t.ok) return;
        }
    t.summary << fences << " fences, longest " << longest << " curves";
}

// ---------------------------------------------------------------- 7

void crit_antisym(Tally& t) {
    for (auto [w, h, px, py] : {std::tuple<int, int, int, int>{4, 4, 0, 0},
                                std::tuple<int, int, int, int>{5, 5, 1, 1}}) {
        PlanePtr plane = khal(w, h, px, py);
        auto curves = enumerate_curves(plane);
        const int n = static_cast<int>(curves.size());
        std::vector<std::uint8_t> raw(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (curve_leq(curves[static_cast<std::size_t>(a)], curves[static_cast<std::size_t>(b)]))
                    raw[static_cast<std::size_t>(a) * n + b] = 1;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                t.expect(!(raw[static_cast<std::size_t>(a) * n + b] &&
                           raw[static_cast<std::size_t>(b) * n + a]),
                         "two distinct curves below each other");

        CurvePoset poset = build_poset(plane, curves);
        const DigitalPlane& pl = *plane;
        for (int a = 0; a < n; ++a) {
            bool any_open = false, any_closed = false;
            for (const Coord& c : poset.curves[static_cast<std::size_t>(a)].points()) {
                PointClass cls = pl.classify(c.first, c.second);
                if (cls == PointClass::open_point) any_open = true;
                if (cls == PointClass::closed_point) any_closed = true;
            }
            bool has_upper = false, has_lower = false;
            for (int b = 0; b < n; ++b) {
                if (b == a) continue;
                if (poset.leq_at(a, b)) has_upper = true;
                if (poset.leq_at(b, a)) has_lower = true;
            }
            if (!any_open)
                t.expect(!has_upper, "open-free curve must be maximal");
            if (!any_closed)
                t.expect(!has_lower, "closed-free curve must be minimal");
        }
        t.summary << w << "x" << h << ": " << n << " curves antisymmetric; ";
    }
    t.summary << "class extremality holds";
}

// ---------------------------------------------------------------- 8

void crit_minimal_space(Tally& t) {
    for (int side : {5, 6, 7}) {
        PlanePtr plane = khal(side, side, 0, 0);
        MinimalCurveSpace space = minimal_curve_space(plane);
        int want = (side - 2) * (side - 2);
        t.expect(space.poset.size() == want,
                 std::to_string(side) + "x" + std::to_string(side) + " must have " +
                     std::to_string(want) + " minimal curves");
        t.expect(space.iso_verified,
                 std::to_string(side) + "x" + std::to_string(side) +
                     " minimal curves must mirror the dual inner plane");
        t.summary << side << "x" << side << ":" << space.poset.size() << " ok; ";
    }
    t.summary << "order matrices equal under A(p) -> p";
}

// ---------------------------------------------------------------- 9

void crit_grid_cycles(Tally& t) {
    const long long want[5] = {0, 1, 13, 213, 9349};
    for (int n = 0; n <= 4; ++n) {
        long long got = count_grid_cycles(n);
        t.expect(got == want[n], "grid cycles n=" + std::to_string(n) + ": got " +
                                     std::to_string(got) + ", want " + std::to_string(want[n]));
        t.summary << "c(" << n << ")=" << got << (n < 4 ? " " : "");
    }
}

// ---------------------------------------------------------------- 10

void crit_marcus_wyse(Tally& t) {
    PlanePtr plane = mw(5, 5, 0);
    auto curves = enumerate_curves(plane);
    t.expect(curves.size() >= 2, "expected at least two curves");
    long long comparable_pairs = 0;
    for (std::size_t a = 0; a < curves.size(); ++a)
        for (std::size_t b = 0; b < curves.size(); ++b)
            if (a != b && curve_leq(curves[a], curves[b])) ++comparable_pairs;
    t.expect(comparable_pairs == 0, "distinct curves must be incomparable, got " +
                                        std::to_string(comparable_pairs) + " pairs");

    CurvePoset poset = build_poset(plane, curves);
    SpaceReport rep = space_report(poset);
    t.expect(!rep.connected, "curve space must be disconnected");

    const FiniteSpace& sp = plane->space();
    long long edges = 0;
    for (int a = 0; a < sp.size(); ++a) edges += static_cast<long long>(sp.adjacency(a).size());
    edges /= 2;
    t.expect(is_connected(sp), "plane comparability graph must be connected");
    long long betti = edges - sp.size() + 1;
    t.expect(betti == 16, "independent cycle count must be 16, got " + std::to_string(betti));
    t.summary << curves.size() << " curves, 0 comparable pairs, cycle rank " << betti;
}

// ---------------------------------------------------------------- 11

void crit_equivalence(Tally& t) {
    {
        PlanePtr plane = khal(4, 4, 0, 0);
        const DigitalPlane& pl = *plane;
        long long agree = 0;
        for (unsigned mask = 0; mask < (1u << 16); ++mask) {
            if (std::popcount(mask) > 12) continue;
            std::vector<Point> pts;
            for (int p = 0; p < 16; ++p)
                if (mask & (1u << p)) pts.push_back(p);
            bool chordless = is_jordan_curve(pl, pts);
            bool deletion = is_jordan_curve_by_deletion(pl, pts);
            t.expect(chordless == deletion, "curve definitions disagree on a 4x4 subset");
            if (chordless == deletion) ++agree;
        }
        t.summary << agree << " 4x4 subsets agree; ";
    }

    PlanePtr plane = khal(5, 5, 1, 1);
    const DigitalPlane& pl = *plane;
    auto curves = enumerate_curves(plane);
    std::vector<Point> border = pl.raw_border();
    int border_free = 0;
    for (const JordanCurve& c : curves) {
        auto ids = c.ids();
        t.expect(is_jordan_curve(pl, ids) && is_jordan_curve_by_deletion(pl, ids),
                 "enumerated curve fails a definition");
        t.expect(c.size() % 2 == 0, "curve of odd size");
        std::vector<Point> sorted_ids = ids;
        std::sort(sorted_ids.begin(), sorted_ids.end());
        std::vector<Point> touching;
        std::set_intersection(sorted_ids.begin(), sorted_ids.end(), border.begin(), border.end(),
                              std::back_inserter(touching));
        if (touching.empty()) {
            ++border_free;
            std::vector<Point> rest;
            for (int p = 0; p < pl.space().size(); ++p)
                if (!std::binary_search(sorted_ids.begin(), sorted_ids.end(), p))
                    rest.push_back(p);
            auto comps = components(Subspace(pl.space(), rest));
            t.expect(comps.size() == 2, "border-avoiding curve complement must split in two");
        }
    }

    // Containment: a curve drawn inside another curve's closed disk keeps
    // its interior inside that disk's interior.
    long long nested = 0;
    std::vector<std::vector<Point>> insides;
    std::vector<std::vector<Point>> closures;
    insides.reserve(curves.size());
    closures.reserve(curves.size());
    for (const JordanCurve& c : curves) {
        std::vector<Point> inside = interior(c);
        std::vector<Point> ids = c.ids();
        std::sort(ids.begin(), ids.end());
        std::vector<Point> closure;
        std::merge(ids.begin(), ids.end(), inside.begin(), inside.end(),
                   std::back_inserter(closure));
        insides.push_back(std::move(inside));
        closures.push_back(std::move(closure));
    }
    for (std::size_t j = 0; j < curves.size(); ++j)
        for (std::size_t k = 0; k < curves.size(); ++k) {
            if (j == k) continue;
            std::vector<Point> kids = curves[k].ids();
            std::sort(kids.begin(), kids.end());
            if (!subset_sorted(kids, closures[j])) continue;
            ++nested;
            t.expect(subset_sorted(insides[k], insides[j]),
                     "nested curve's interior leaks outside");
        }
    t.summary << curves.size() << " 5x5 curves even and two-sided (" << border_free
              << " border-free), " << nested << " nested pairs contained";
}

// ---------------------------------------------------------------- 12

void crit_duality(Tally& t) {
    long long planes = 0;
    for (int lx = 3; lx <= 6; ++lx)
        for (int ly = 3; ly <= 6; ++ly)
            for (int ex = 0; ex <= 1; ++ex)
                for (int ey = 0; ey <= 1; ++ey) {
                    Cots X = make_cots(lx, ex == 0 ? EndpointKind::closed_endpoint
                                                   : EndpointKind::open_endpoint);
                    Cots Y = make_cots(ly, ey == 0 ? EndpointKind::closed_endpoint
                                                   : EndpointKind::open_endpoint);
                    FiniteSpace prod = product(X.space, Y.space);
                    t.expect(prod.dual() == product(X.space.dual(), Y.space.dual()),
                             "dual of a product differs from the product of duals");

                    PlanePtr plane = khal(lx, ly, ex, ey);
                    t.expect(plane->space() == prod, "plane differs from the product of its axes");
                    PlanePtr swapped = khal(lx, ly, 1 - ex, 1 - ey);
                    t.expect(plane->space().dual() == swapped->space(),
                             "dual plane differs from the parity-swapped plane");
                    for (int p = 0; p < prod.size(); ++p) {
                        PointClass a = plane->classify(p);
                        PointClass b = swapped->classify(p);
                        bool swap_ok =
                            (a == PointClass::mixed_point && b == PointClass::mixed_point) ||
                            (a == PointClass::open_point && b == PointClass::closed_point) ||
                            (a == PointClass::closed_point && b == PointClass::open_point);
                        t.expect(swap_ok, "dual plane must swap open and closed points");
                    }
                    ++planes;
                }
    t.summary << planes << " axis pairs: products, duals and parity swaps agree";
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    struct Entry {
        const char* name;
        void (*fn)(Tally&);
    };
    const Entry entries[] = {
        {"4x4 curve space", crit_4x4},
        {"5x5 curve space", crit_5x5},
        {"3xn curve counts", crit_3xn},
        {"9x9 metric suite", crit_metric},
        {"shrink and minimalize", crit_shrink},
        {"morph all pairs", crit_morph},
        {"antisymmetry and extremal classes", crit_antisym},
        {"minimal curves vs dual inner plane", crit_minimal_space},
        {"grid cycle table", crit_grid_cycles},
        {"Marcus-Wyse curve space", crit_marcus_wyse},
        {"definition equivalence", crit_equivalence},
        {"duality identities", crit_duality},
    };

    std::vector<CriterionResult> out;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        CriterionResult r;
        r.index = index;
        r.name = e.name;
        auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            e.fn(t);
            r.passed = t.ok;
            r.detail = t.ok ? t.summary.str() : t.first;
        } catch (const std::exception& ex) {
            r.passed = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace dtop
