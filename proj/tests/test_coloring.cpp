#include <doctest.h>

#include "oracles.hpp"
#include "pkcolor/coloring.hpp"
#include "pkcolor/suite.hpp"

using namespace pkcolor;

TEST_CASE("[coloring] properness") {
    CHECK(is_proper(coloring_from_rows({{0, 1}, {1, 0}})));
    CHECK_FALSE(is_proper(coloring_from_rows({{0, 0}})));
    CHECK(is_proper(coloring_from_rows({{0, 1, 2, 0, 1, 2}, {1, 2, 0, 1, 2, 0}})));
    auto edge = monochromatic_edge(coloring_from_rows({{0, 1}, {0, 2}}));
    REQUIRE(edge);
    CHECK(edge->first == Vertex{0, 0});
    CHECK(edge->second == Vertex{1, 0});
}

TEST_CASE("[coloring] constructor validation") {
    CHECK_THROWS_AS(Coloring(GridGraph(1, 2), 2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(GridGraph(1, 2), 2, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(GridGraph(1, 2), 2, {0, -1}), std::invalid_argument);
}

TEST_CASE("[coloring] text format round trip") {
    std::string text = "2 3 3\n0 1 2\n1 2 0\n";
    Coloring col = parse_coloring(text);
    CHECK(col.grid().rows() == 2);
    CHECK(col.palette() == 3);
    CHECK(col.at(Vertex{1, 2}) == 0);
    CHECK(to_text(col) == text);
    CHECK(render_ascii(col) == "012\n120\n");
}

TEST_CASE("[coloring] parse errors carry positions") {
    auto position = [](const std::string& text) {
        try {
            parse_coloring(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(0, 0);
    };
    CHECK(position("2 2 2\n0 1\n1 0 \n").first == 3);
    CHECK(position("2 2 2\n0 1\n1 x\n") == std::make_pair(3, 3));
    CHECK(position("2 2 2\n0 1\n").first == 3);
    CHECK(position("2 2 2\r\n0 1\n1 0\n").first == 1);
    CHECK(position("1 2 2\n0 2\n").first == 2);
    CHECK(position("").first == 1);
}

TEST_CASE("[coloring] components of the ring pattern") {
    Coloring ring = coloring_from_rows({{0, 1, 0}, {1, 2, 1}, {0, 1, 0}});
    auto comps = bicolored_components(ring, ColorPair(0, 1));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices.size() == 8);
    CHECK(comps[0].truly_bicolored);
    CHECK(comps[0].kind() == ComponentClass::Peripheral);
    CHECK(comps[0].classification.touched_sides == SideSet{Side::Top, Side::Bottom, Side::Left, Side::Right});
}

TEST_CASE("[coloring] empty and single-vertex components") {
    Coloring two = coloring_from_rows({{0, 1}, {1, 0}}, 3);
    CHECK(bicolored_components(two, ColorPair(1, 2)).size() == 2);
    Coloring row = coloring_from_rows({{0, 1, 0}}, 3);
    auto comps = bicolored_components(row, ColorPair(0, 2));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices.size() == 1);
    CHECK_FALSE(comps[0].truly_bicolored);
    Coloring checker = coloring_from_rows({{0, 1}, {1, 0}}, 3);
    CHECK(bicolored_components(checker, ColorPair(0, 1)).size() == 1);
    CHECK(bicolored_components(Coloring(GridGraph(1, 1), 3, {2}), ColorPair(0, 1)).empty());
}

TEST_CASE("[coloring] classification examples") {
    GridGraph g(4, 4);
    std::vector<Vertex> type1{{0, 1}, {0, 2}};
    CHECK(classify(g, type1).kind == ComponentClass::PartialType1);
    CHECK(classify(g, type1).normalization == Transform::Identity);
    std::vector<Vertex> type2{{0, 0}, {1, 0}, {0, 1}};
    CHECK(classify(g, type2).kind == ComponentClass::PartialType2);
    std::vector<Vertex> bottom_right{{3, 3}, {3, 2}};
    Classification c = classify(g, bottom_right);
    CHECK(c.kind == ComponentClass::PartialType2);
    CHECK(c.normalization == Transform::Rotate180);
    std::vector<Vertex> right{{1, 3}, {2, 3}};
    Classification r = classify(g, right);
    CHECK(r.kind == ComponentClass::PartialType1);
    CHECK(r.normalization == Transform::Rotate270);
    std::vector<Vertex> inner{{1, 1}, {1, 2}};
    CHECK(classify(g, inner).kind == ComponentClass::Interior);
    std::vector<Vertex> across{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    Classification p = classify(g, across);
    CHECK(p.kind == ComponentClass::Peripheral);
    REQUIRE(p.opposite_sides);
    CHECK(p.opposite_sides->first == Side::Top);
    CHECK(p.opposite_sides->second == Side::Bottom);
}

TEST_CASE("[coloring] a single-row grid makes every touching component peripheral") {
    GridGraph g(1, 5);
    std::vector<Vertex> vs{{0, 2}};
    CHECK(classify(g, vs).kind == ComponentClass::Peripheral);
}

TEST_CASE("[coloring] normalization maps touched sides onto top and left") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            for_each_proper_3coloring(m, n, [&](const Coloring& col) {
                for (ColorPair p : all_pairs(3)) {
                    for (const auto& comp : bicolored_components(col, p)) {
                        if (comp.kind() != ComponentClass::PartialType1 && comp.kind() != ComponentClass::PartialType2) {
                            continue;
                        }
                        GridGraph h = transformed_grid(col.grid(), comp.classification.normalization);
                        SideSet sides;
                        for (Vertex v : comp.vertices) {
                            sides.merge(h.sides_touched(apply_transform(col.grid(), comp.classification.normalization, v)));
                        }
                        if (comp.kind() == ComponentClass::PartialType1) {
                            CHECK(sides == SideSet{Side::Top});
                        } else {
                            CHECK(sides == SideSet{Side::Top, Side::Left});
                        }
                    }
                }
                return true;
            });
        }
    }
}

namespace {

// Maximality, disjointness and cover of the component partition, plus the
// third-color fact for neighbors of two-colored components.
void check_partition(const Coloring& col) {
    for (ColorPair p : all_pairs(col.palette())) {
        auto comps = bicolored_components(col, p);
        std::vector<int> owner(static_cast<std::size_t>(col.grid().vertex_count()), -1);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (Vertex v : comps[i].vertices) {
                CHECK(owner[static_cast<std::size_t>(col.grid().index(v))] == -1);
                owner[static_cast<std::size_t>(col.grid().index(v))] = static_cast<int>(i);
                for (Vertex w : col.grid().neighbors(v)) {
                    if (p.contains(col.at(w))) {
                        CHECK(comps[i].contains(w));
                    } else if (comps[i].truly_bicolored && col.palette() == 3) {
                        CHECK(col.at(w) == 3 - p.first - p.second);
                    }
                }
            }
        }
        for (int i = 0; i < col.grid().vertex_count(); ++i) {
            CHECK((owner[static_cast<std::size_t>(i)] >= 0) == p.contains(col.at(i)));
        }
    }
}

}  // namespace

TEST_CASE("[coloring] partition and neighbor colors on all 3x3 colorings") {
    int count = 0;
    for_each_proper_3coloring(3, 3, [&](const Coloring& col) {
        check_partition(col);
        ++count;
        return true;
    });
    CHECK(count == 246);
}

TEST_CASE("[coloring] partition and neighbor colors on random 5x5 colorings") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) check_partition(random_proper_3coloring(5, 5, rng));
}

TEST_CASE("[coloring] enumeration matches the brute-force proper count") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 4; ++n) {
            int lib = 0;
            for_each_proper_3coloring(m, n, [&](const Coloring&) {
                ++lib;
                return true;
            });
            int naive = 0;
            oracle::proper_colorings(m, n, 3, [&](const std::vector<int>&) {
                ++naive;
                return true;
            });
            CHECK(lib == naive);
        }
    }
}

TEST_CASE("[coloring] color pairs") {
    CHECK(all_pairs(3).size() == 3);
    CHECK(all_pairs(4).size() == 6);
    CHECK_THROWS(ColorPair(1, 1));
    ColorPair p(2, 0);
    CHECK(p.first == 0);
    CHECK(p.other(0) == 2);
}

TEST_CASE("[coloring] component containing") {
    Coloring col = coloring_from_rows({{0, 1, 2}, {1, 2, 0}});
    auto comp = component_containing(col, ColorPair(0, 1), {0, 0});
    CHECK(comp.vertices.size() == 3);
    CHECK_THROWS(component_containing(col, ColorPair(0, 1), {0, 2}));
}

TEST_CASE("[coloring] transform_coloring moves colors with vertices") {
    Coloring col = coloring_from_rows({{0, 1, 2}, {1, 2, 0}});
    Coloring t = transform_coloring(col, Transform::Transpose);
    CHECK(t.grid().rows() == 3);
    CHECK(t.at(Vertex{2, 1}) == col.at(Vertex{1, 2}));
}
