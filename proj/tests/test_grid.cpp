#include <doctest.h>

#include <algorithm>
#include <set>

#include "pkcolor/grid.hpp"

using namespace pkcolor;

TEST_CASE("[grid] counts") {
    CHECK(make_grid(1, 1).vertex_count() == 1);
    CHECK(make_grid(1, 1).edge_count() == 0);
    CHECK(make_grid(3, 3).vertex_count() == 9);
    CHECK(make_grid(3, 3).edge_count() == 12);
    CHECK(make_grid(2, 6).vertex_count() == 12);
    CHECK(make_grid(2, 6).edge_count() == 16);
    CHECK_THROWS_AS(make_grid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(3, -1), std::invalid_argument);
}

TEST_CASE("[grid] adjacency is unit distance") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            GridGraph g(m, n);
            int edges = 0;
            for (int i = 0; i < g.vertex_count(); ++i) {
                for (int j = 0; j < g.vertex_count(); ++j) {
                    Vertex a = g.vertex(i);
                    Vertex b = g.vertex(j);
                    bool unit = std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
                    CHECK(g.adjacent(a, b) == unit);
                    edges += unit && i < j ? 1 : 0;
                }
            }
            CHECK(edges == g.edge_count());
            CHECK(static_cast<int>(g.edges().size()) == g.edge_count());
        }
    }
}

TEST_CASE("[grid] neighbors come clockwise from north") {
    GridGraph g(3, 3);
    auto ns = g.neighbors({1, 1});
    REQUIRE(ns.size() == 4);
    CHECK(ns[0] == Vertex{0, 1});
    CHECK(ns[1] == Vertex{1, 2});
    CHECK(ns[2] == Vertex{2, 1});
    CHECK(ns[3] == Vertex{1, 0});
    auto corner = g.neighbors({0, 0});
    REQUIRE(corner.size() == 2);
    CHECK(corner[0] == Vertex{0, 1});
    CHECK(corner[1] == Vertex{1, 0});
}

TEST_CASE("[grid] degrees") {
    for (int m = 2; m <= 5; ++m) {
        for (int n = 2; n <= 5; ++n) {
            GridGraph g(m, n);
            for (int i = 0; i < g.vertex_count(); ++i) {
                Vertex v = g.vertex(i);
                int expected = 4 - g.sides_touched(v).size();
                CHECK(g.degree(v) == expected);
            }
        }
    }
    CHECK(GridGraph(1, 4).degree({0, 0}) == 1);
    CHECK(GridGraph(1, 4).degree({0, 2}) == 2);
    CHECK(GridGraph(1, 1).degree({0, 0}) == 0);
}

TEST_CASE("[grid] sides touched") {
    GridGraph g(3, 3);
    CHECK(g.sides_touched({0, 0}) == SideSet{Side::Top, Side::Left});
    CHECK(g.sides_touched({1, 1}).empty());
    CHECK(g.sides_touched({2, 1}) == SideSet{Side::Bottom});
    CHECK(GridGraph(1, 4).sides_touched({0, 2}) == SideSet{Side::Top, Side::Bottom});
}

TEST_CASE("[grid] symmetry examples") {
    GridGraph sq(3, 3);
    CHECK(apply_symmetry(sq, Transform::Rotate90, {0, 0}) == Vertex{0, 2});
    CHECK(apply_symmetry(sq, Transform::Identity, {1, 2}) == Vertex{1, 2});
    GridGraph rect(2, 3);
    CHECK(apply_symmetry(rect, Transform::FlipHorizontal, {0, 0}) == Vertex{0, 2});
    CHECK_THROWS_AS(apply_symmetry(rect, Transform::Rotate90, {0, 0}), std::invalid_argument);
    CHECK(symmetries(sq).size() == 8);
    CHECK(symmetries(rect).size() == 4);
}

TEST_CASE("[grid] symmetries preserve edges and invert") {
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            GridGraph g(m, n);
            for (Transform t : symmetries(g)) {
                std::set<std::pair<Vertex, Vertex>> image;
                for (auto [a, b] : g.edges()) {
                    Vertex x = apply_symmetry(g, t, a);
                    Vertex y = apply_symmetry(g, t, b);
                    CHECK(g.adjacent(x, y));
                    image.insert(std::minmax(x, y));
                }
                CHECK(static_cast<int>(image.size()) == g.edge_count());
                for (int i = 0; i < g.vertex_count(); ++i) {
                    Vertex v = g.vertex(i);
                    CHECK(apply_symmetry(g, inverse(t), apply_symmetry(g, t, v)) == v);
                }
            }
        }
    }
}

TEST_CASE("[grid] axis-swapping transforms reshape the grid") {
    GridGraph g(2, 5);
    for (Transform t : kAllTransforms) {
        GridGraph h = transformed_grid(g, t);
        CHECK(h.rows() == (swaps_axes(t) ? 5 : 2));
        std::set<Vertex> seen;
        for (int i = 0; i < g.vertex_count(); ++i) {
            Vertex w = apply_transform(g, t, g.vertex(i));
            CHECK(h.contains(w));
            seen.insert(w);
            CHECK(apply_transform(h, inverse(t), w) == g.vertex(i));
        }
        CHECK(static_cast<int>(seen.size()) == g.vertex_count());
    }
}

TEST_CASE("[grid] directions") {
    CHECK(direction_between({1, 1}, {0, 1}) == Direction::North);
    CHECK(direction_between({1, 1}, {1, 2}) == Direction::East);
    CHECK(rotate_cw(Direction::West, 1) == Direction::North);
    CHECK(opposite(Direction::East) == Direction::West);
    CHECK_THROWS(direction_between({0, 0}, {1, 1}));
}
