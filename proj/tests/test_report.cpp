#include <doctest.h>

#include "pkcolor/report.hpp"

using namespace pkcolor;

TEST_CASE("[report] coloring round trip") {
    Coloring col = coloring_from_rows({{0, 1, 2}, {2, 0, 1}}, 4);
    Json j = to_json(col);
    CHECK(j["palette"] == 4);
    CHECK(coloring_from_json(j) == col);
    CHECK(coloring_from_json(Json::parse(j.dump())) == col);
    Json broken = j;
    broken["grid"][1].push_back(0);
    CHECK_THROWS_AS(coloring_from_json(broken), std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_json(Json::parse("{\"rows\": 1}")), std::invalid_argument);
}

TEST_CASE("[report] envelope") {
    Json r = make_report("solve", Json{{"rows", 3}}, to_json(solve_sk(2, 2, 5)));
    CHECK(r["schema"] == "pkcolor-report/1");
    CHECK(r["parameters"]["rows"] == 3);
    CHECK(r["result"]["value"] == 2);
    CHECK(r["result"]["certificate"]["colors"] == 1);
}
