#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "dtop/curve_space.hpp"

using namespace dtop;

namespace {

PlanePtr khal(int w, int h, int px = 0, int py = 0) {
    PlaneSpec s;
    s.width = w;
    s.height = h;
    s.x_closed_parity = px;
    s.y_closed_parity = py;
    return make_plane(s);
}

PlanePtr mw(int w, int h, int parity = 0) {
    PlaneSpec s;
    s.topology = Topology::marcus_wyse;
    s.width = w;
    s.height = h;
    s.mw_closed_parity = parity;
    return make_plane(s);
}

}  // namespace

TEST_CASE("a 3x3 plane carries exactly one curve") {
    PlanePtr p = khal(3, 3);
    std::vector<JordanCurve> curves = enumerate_curves(p);
    REQUIRE(curves.size() == 1);
    CHECK(curves.front() == minimal_curve(p, {1, 1}));
    CHECK(curves.front().size() == 8);

    CurvePoset poset = build_poset(p, curves);
    CHECK(poset.size() == 1);
    CHECK(poset.leq_at(0, 0));
    CHECK(poset.covers.empty());
    CHECK(poset.closure_added == 0);
    CHECK(poset.index_of(curves.front()) == 0);
    CHECK(poset.index_of(minimal_curve(khal(4, 4), {1, 1})) == -1);
}

TEST_CASE("enumeration of a 4x4 plane") {
    PlanePtr p = khal(4, 4);
    std::vector<JordanCurve> curves = enumerate_curves(p);
    REQUIRE(curves.size() == 11);

    std::map<int, int> by_size;
    for (const JordanCurve& c : curves) ++by_size[c.size()];
    CHECK(by_size == std::map<int, int>{{4, 2}, {8, 8}, {10, 1}});

    for (std::size_t i = 0; i + 1 < curves.size(); ++i)
        CHECK(curves[i].key() < curves[i + 1].key());

    for (const JordanCurve& c : curves) {
        CHECK(is_jordan_curve(*p, c.ids()));
        CHECK(is_jordan_curve_by_deletion(*p, c.ids()));
    }

    // the two size-4 curves are the diamonds around the mixed inner points
    CHECK(std::count(curves.begin(), curves.end(), minimal_curve(p, {1, 2})) == 1);
    CHECK(std::count(curves.begin(), curves.end(), minimal_curve(p, {2, 1})) == 1);
}

TEST_CASE("the 4x4 curve order and its covers") {
    PlanePtr p = khal(4, 4);
    CurvePoset poset = curve_poset(p);
    REQUIRE(poset.size() == 11);
    CHECK(poset.closure_added == 0);
    CHECK(poset.covers.size() == 14);

    int strict = 0;
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            if (a != b && poset.leq_at(a, b)) ++strict;
    CHECK(strict == 42);

    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            for (int c = 0; c < poset.size(); ++c)
                if (poset.leq_at(a, b) && poset.leq_at(b, c)) CHECK(poset.leq_at(a, c));

    // covers = strict pairs with nothing strictly between
    std::vector<std::pair<int, int>> expect;
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b) {
            if (a == b || !poset.leq_at(a, b)) continue;
            bool between = false;
            for (int c = 0; c < poset.size() && !between; ++c)
                if (c != a && c != b && poset.leq_at(a, c) && poset.leq_at(c, b)) between = true;
            if (!between) expect.push_back({a, b});
        }
    std::vector<std::pair<int, int>> got = poset.covers;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);

    Extremals ext = extremal_elements(poset);
    REQUIRE(ext.maximal.size() == 1);
    REQUIRE(ext.minimal.size() == 1);
    CHECK(poset.curves[ext.maximal.front()] == minimal_curve(p, {1, 1}));
    CHECK(poset.curves[ext.minimal.front()] == minimal_curve(p, {2, 2}));

    FiniteSpace as = poset.as_space();
    CHECK(as.size() == 11);
    CHECK(is_connected(as));
}

TEST_CASE("the 4x4 space report") {
    SpaceReport r = space_report(curve_poset(khal(4, 4)));
    CHECK(r.curves == 11);
    CHECK(r.strict_pairs == 42);
    CHECK(r.covers == 14);
    CHECK(r.closure_added == 0);
    CHECK(r.maximal == 1);
    CHECK(r.minimal == 1);
    CHECK(r.connected);
    CHECK(r.core_size == 1);
    CHECK(r.contractible);
    CHECK(r.height == 6);
    CHECK(r.extremal_by_class);
    CHECK(r.maximal_with_open == 0);
    CHECK(r.minimal_with_closed == 0);
}

TEST_CASE("the 5x5 open border space") {
    PlanePtr p = khal(5, 5, 1, 1);
    CurvePoset poset = curve_poset(p);
    SpaceReport r = space_report(poset);
    CHECK(r.curves == 87);
    CHECK(r.strict_pairs == 1139);
    CHECK(r.covers == 184);
    CHECK(r.closure_added == 0);
    CHECK(r.maximal == 1);
    CHECK(r.minimal == 13);
    CHECK(r.connected);
    CHECK(r.core_size == 1);
    CHECK(r.contractible);
    CHECK(r.height == 8);
    CHECK(r.extremal_by_class);
    CHECK(r.maximal_with_open == 0);
    CHECK(r.minimal_with_closed == 0);

    Extremals ext = extremal_elements(poset);
    REQUIRE(ext.maximal.size() == 1);
    CHECK(poset.curves[ext.maximal.front()] == minimal_curve(p, {2, 2}));

    std::map<int, int> min_sizes;
    for (int i : ext.minimal) ++min_sizes[poset.curves[i].size()];
    CHECK(min_sizes == std::map<int, int>{{8, 4}, {12, 4}, {16, 5}});

    auto is_min = [&](Coord c) {
        int i = poset.index_of(minimal_curve(p, c));
        REQUIRE(i >= 0);
        return std::find(ext.minimal.begin(), ext.minimal.end(), i) != ext.minimal.end();
    };
    // rings around closed points have no closed points themselves
    CHECK(is_min({1, 1}));
    CHECK(is_min({1, 3}));
    CHECK(is_min({3, 1}));
    CHECK(is_min({3, 3}));
    // diamonds around mixed points sit strictly inside the order
    CHECK_FALSE(is_min({2, 3}));
    CHECK_FALSE(is_min({3, 2}));
}

TEST_CASE("minimal curves form the dual inner plane") {
    PlanePtr p = khal(4, 4);
    MinimalCurveSpace m = minimal_curve_space(p);
    REQUIRE(m.poset.size() == 4);
    CHECK(m.iso_verified);
    CHECK(m.centers == std::vector<Coord>{{1, 1}, {1, 2}, {2, 2}, {2, 1}});

    const FiniteSpace& sp = p->space();
    for (Coord a : m.centers)
        for (Coord b : m.centers) {
            int ia = m.poset.index_of(minimal_curve(p, a));
            int ib = m.poset.index_of(minimal_curve(p, b));
            REQUIRE(ia >= 0);
            REQUIRE(ib >= 0);
            CHECK(m.poset.leq_at(ia, ib) ==
                  sp.leq(p->id(b.first, b.second), p->id(a.first, a.second)));
        }

    MinimalCurveSpace m5 = minimal_curve_space(khal(5, 5, 1, 1));
    CHECK(m5.poset.size() == 9);
    CHECK(m5.iso_verified);
}

TEST_CASE("Marcus-Wyse curves are pairwise incomparable") {
    CurvePoset poset = curve_poset(mw(4, 4));
    REQUIRE(poset.size() == 24);
    CHECK(poset.closure_added == 0);
    CHECK(poset.covers.empty());
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            CHECK(poset.leq_at(a, b) == (a == b));

    SpaceReport r = space_report(poset);
    CHECK(r.strict_pairs == 0);
    CHECK_FALSE(r.connected);
    CHECK(r.maximal == 24);
    CHECK(r.minimal == 24);
    CHECK(r.extremal_by_class);

    CHECK(curve_poset(mw(5, 5)).size() == 229);
}

TEST_CASE("grid cycle counts") {
    CHECK(count_grid_cycles(0) == 0);
    CHECK(count_grid_cycles(1) == 1);
    CHECK(count_grid_cycles(2) == 13);
    CHECK(count_grid_cycles(3) == 213);
    CHECK(count_grid_cycles(4) == 9349);
    CHECK_THROWS_AS(count_grid_cycles(6), std::invalid_argument);
    CHECK_THROWS_AS(count_grid_cycles(-1), std::invalid_argument);
}

TEST_CASE("3 by n planes have triangular curve counts") {
    for (int n = 3; n <= 12; ++n) {
        long long expect = static_cast<long long>(n - 1) * (n - 2) / 2;
        CHECK(count_3xn(n, EndpointKind::closed_endpoint) == expect);
        CHECK(count_3xn(n, EndpointKind::open_endpoint) == expect);
    }
    CHECK_THROWS_AS(count_3xn(2, EndpointKind::closed_endpoint), std::invalid_argument);
    CHECK_THROWS_AS(count_3xn(13, EndpointKind::closed_endpoint), std::invalid_argument);
}

TEST_CASE("enumeration and poset construction validate their inputs") {
    CHECK_THROWS_AS(enumerate_curves(khal(13, 3, 1, 1)), std::invalid_argument);

    PlanePtr p = khal(4, 4);
    std::vector<JordanCurve> foreign = {minimal_curve(khal(5, 5), {2, 2})};
    CHECK_THROWS_AS(build_poset(p, foreign), std::invalid_argument);

    std::vector<JordanCurve> dup = {minimal_curve(p, {2, 2}), minimal_curve(p, {2, 2})};
    CHECK_THROWS_AS(build_poset(p, dup), std::invalid_argument);
}
