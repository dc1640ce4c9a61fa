#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "dtop/plane.hpp"

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
    s.width = w;
    s.height = h;
    s.topology = Topology::marcus_wyse;
    s.mw_closed_parity = parity;
    return make_plane(s);
}

int count_class(const DigitalPlane& p, PointClass c) {
    int n = 0;
    for (Point x = 0; x < p.space().size(); ++x)
        if (p.classify(x) == c) ++n;
    return n;
}

// 4-neighbor connectivity of a point-id set, by lattice adjacency only
bool four_connected(const DigitalPlane& p, const std::vector<Point>& pts) {
    if (pts.empty()) return true;
    std::set<Point> left(pts.begin(), pts.end());
    std::vector<Point> stack = {pts.front()};
    left.erase(pts.front());
    while (!stack.empty()) {
        auto [i, j] = p.coord(stack.back());
        stack.pop_back();
        const int di[] = {1, -1, 0, 0};
        const int dj[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            if (!p.in_bounds(i + di[k], j + dj[k])) continue;
            Point q = p.id(i + di[k], j + dj[k]);
            if (left.erase(q)) stack.push_back(q);
        }
    }
    return left.empty();
}

}  // namespace

TEST_CASE("make_cots endpoints and lengths") {
    Cots two = make_cots(2, EndpointKind::closed_endpoint);
    CHECK(two.closed_at(0));
    CHECK_FALSE(two.closed_at(1));
    CHECK(two.space.comparable(0, 1));
    CHECK(two.space.leq(1, 0));

    Cots nine = make_cots(9, EndpointKind::open_endpoint);
    int closed = 0;
    for (int i = 0; i < 9; ++i) closed += nine.closed_at(i) ? 1 : 0;
    CHECK(closed == 4);
    CHECK(nine.space.size() == 9);

    CHECK_THROWS_AS(make_cots(1, EndpointKind::closed_endpoint), std::invalid_argument);
}

TEST_CASE("classification grids") {
    CHECK(classification_grid(*khal(5, 5)) ==
          "CMCMC\n"
          "MOMOM\n"
          "CMCMC\n"
          "MOMOM\n"
          "CMCMC\n");
    CHECK(classification_grid(*khal(5, 5, 1, 1)) ==
          "OMOMO\n"
          "MCMCM\n"
          "OMOMO\n"
          "MCMCM\n"
          "OMOMO\n");

    const DigitalPlane& open_border = *khal(5, 5, 1, 1);
    CHECK(count_class(open_border, PointClass::open_point) == 9);
    CHECK(count_class(open_border, PointClass::closed_point) == 4);
    CHECK(count_class(open_border, PointClass::mixed_point) == 12);
}

TEST_CASE("classify follows the parity rule") {
    PlanePtr p = khal(6, 6);
    CHECK(p->classify(2, 2) == PointClass::closed_point);
    CHECK(p->classify(1, 2) == PointClass::mixed_point);
    CHECK(p->classify(2, 1) == PointClass::mixed_point);
    CHECK(p->classify(3, 3) == PointClass::open_point);
    CHECK(p->pure(p->id(2, 2)));
    CHECK_FALSE(p->pure(p->id(1, 2)));
    CHECK_THROWS_AS(p->classify(6, 0), std::invalid_argument);

    PlanePtr m = mw(4, 4);
    CHECK(m->classify(1, 2) == PointClass::open_point);
    CHECK(m->classify(1, 1) == PointClass::closed_point);
    CHECK(m->space().down_set(m->id(1, 2)) == std::vector<Point>{m->id(1, 2)});
}

TEST_CASE("plane construction rejects bad specs") {
    PlaneSpec s;
    s.width = 1;
    s.height = 3;
    CHECK_THROWS_AS(make_plane(s), std::invalid_argument);
    s.width = 3;
    s.x_closed_parity = 2;
    CHECK_THROWS_AS(make_plane(s), std::invalid_argument);
    s.x_closed_parity = 0;
    s.topology = Topology::marcus_wyse;
    s.mw_closed_parity = -1;
    CHECK_THROWS_AS(make_plane(s), std::invalid_argument);

    PlaneSpec tiny;
    tiny.width = 2;
    tiny.height = 2;
    CHECK(make_plane(tiny)->space().size() == 4);
}

TEST_CASE("ids and coordinates round trip") {
    PlanePtr p = khal(4, 7);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 7; ++j) {
            Point x = p->id(i, j);
            CHECK(p->coord(x) == Coord{i, j});
        }
    CHECK(p->in_bounds(3, 6));
    CHECK_FALSE(p->in_bounds(4, 0));
    CHECK_FALSE(p->in_bounds(0, -1));
    CHECK_THROWS_AS(p->id(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(p->coord(28), std::invalid_argument);
}

TEST_CASE("a Khalimsky plane is the product of its two COTS") {
    for (int w = 3; w <= 7; ++w)
        for (int h = 3; h <= 7; ++h) {
            PlanePtr p = khal(w, h, w % 2, h % 2);
            FiniteSpace prod = product(make_cots(w, w % 2 ? EndpointKind::open_endpoint
                                                          : EndpointKind::closed_endpoint)
                                           .space,
                                       make_cots(h, h % 2 ? EndpointKind::open_endpoint
                                                          : EndpointKind::closed_endpoint)
                                           .space);
            CHECK(p->space() == prod);
        }
}

TEST_CASE("the dual plane is the parity-swapped plane") {
    PlanePtr a = khal(4, 5, 0, 1);
    PlanePtr swapped = khal(4, 5, 1, 0);
    CHECK(a->space().dual() == swapped->space());
    for (Point x = 0; x < a->space().size(); ++x) {
        PointClass ca = a->classify(x);
        PointClass cb = swapped->classify(x);
        if (ca == PointClass::mixed_point)
            CHECK(cb == PointClass::mixed_point);
        else
            CHECK(ca != cb);
    }
}

TEST_CASE("border point sets") {
    PlanePtr p = khal(5, 5, 1, 1);
    CHECK(p->raw_border().size() == 16);
    std::vector<Point> inner = p->inner_points();
    REQUIRE(inner.size() == 9);
    for (Point x : inner) {
        auto [i, j] = p->coord(x);
        CHECK(i >= 1);
        CHECK(i <= 3);
        CHECK(j >= 1);
        CHECK(j <= 3);
        CHECK_FALSE(p->on_border(x));
    }
}

TEST_CASE("adjusted border deletes exactly the mixed corners") {
    // open corners: nothing deleted
    CHECK(khal(5, 5, 1, 1)->adjusted_border().size() == 16);

    // 4x4 has two mixed corners
    PlanePtr p4 = khal(4, 4);
    std::vector<Point> adj = p4->adjusted_border();
    CHECK(adj.size() == 10);
    CHECK(std::find(adj.begin(), adj.end(), p4->id(0, 3)) == adj.end());
    CHECK(std::find(adj.begin(), adj.end(), p4->id(3, 0)) == adj.end());

    // closed corners: the border of a 3x3 plane is the center's adjacency set
    PlanePtr p3 = khal(3, 3);
    std::vector<Point> b3 = p3->adjusted_border();
    std::sort(b3.begin(), b3.end());
    CHECK(b3 == p3->space().adjacency(p3->id(1, 1)));

    CHECK_THROWS_AS(mw(5, 5)->adjusted_border(), std::invalid_argument);
    CHECK_THROWS_AS(khal(3, 2)->adjusted_border(), std::invalid_argument);
}

TEST_CASE("adjacency sizes of interior points") {
    PlanePtr p = khal(5, 5);
    CHECK(p->space().adjacency(p->id(2, 2)).size() == 8);
    CHECK(p->space().adjacency(p->id(1, 1)).size() == 8);
    CHECK(p->space().adjacency(p->id(1, 2)).size() == 4);

    PlanePtr m = mw(5, 5);
    for (Point x : m->inner_points()) CHECK(m->space().adjacency(x).size() == 4);

    PlanePtr m3 = mw(3, 3);
    CHECK(count_class(*m3, PointClass::mixed_point) == 0);
    for (Point x = 0; x < m3->space().size(); ++x)
        CHECK(m3->space().adjacency(x).size() <= 4);
}

TEST_CASE("every connected 3-point subset of a COTS has a separating point") {
    for (int len = 3; len <= 9; ++len) {
        Cots c = make_cots(len, EndpointKind::closed_endpoint);
        for (int a = 0; a < len; ++a)
            for (int b = a + 1; b < len; ++b)
                for (int d = b + 1; d < len; ++d) {
                    Subspace sub(c.space, {a, b, d});
                    bool consecutive = (b == a + 1 && d == b + 1);
                    CHECK(is_connected(sub) == consecutive);
                    if (consecutive) {
                        // removing the middle point disconnects the subset
                        CHECK_FALSE(is_connected(Subspace(c.space, {a, d})));
                    }
                }
    }
}

TEST_CASE("4-connected subsets are fence-connected") {
    PlanePtr planes[] = {khal(3, 3), mw(3, 3)};
    for (const PlanePtr& p : planes) {
        const int n = p->space().size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<Point> pts;
            for (int x = 0; x < n; ++x)
                if (mask & (1 << x)) pts.push_back(x);
            if (!four_connected(*p, pts)) continue;
            CHECK(is_connected(Subspace(p->space(), pts)));
        }
    }

    // for Marcus-Wyse the two notions coincide
    PlanePtr m = mw(3, 3);
    const int n = m->space().size();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<Point> pts;
        for (int x = 0; x < n; ++x)
            if (mask & (1 << x)) pts.push_back(x);
        CHECK(four_connected(*m, pts) == is_connected(Subspace(m->space(), pts)));
    }
}
