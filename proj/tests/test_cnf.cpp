#include <doctest.h>

#include "oracles.hpp"
#include "pkcolor/cnf.hpp"
#include "pkcolor/paths.hpp"
#include "pkcolor/solver.hpp"

using namespace pkcolor;

TEST_CASE("[cnf] path inventory") {
    CHECK(enumerate_paths(GridGraph(1, 5), 5).size() == 1);
    CHECK(enumerate_paths(GridGraph(2, 2), 4).size() == 4);
    CHECK(enumerate_paths(GridGraph(2, 2), 3).size() == 4);  // one per middle vertex
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 3; k <= 7; ++k) {
                auto paths = enumerate_paths(GridGraph(m, n), k);
                CHECK(paths.size() == oracle::count_paths(m, n, k));
                for (const auto& p : paths) CHECK(p.front() < p.back());
            }
        }
    }
    CHECK_THROWS(enumerate_paths(GridGraph(2, 2), 2));
}

TEST_CASE("[cnf] clause families and header") {
    CnfInstance inst = encode(3, 3, 5, 3);
    CHECK(inst.variable_count() == 27);
    CHECK(inst.clauses.size() == expected_clause_count(inst));
    std::size_t n = 9;
    std::size_t e = 12;
    CHECK(inst.clauses.size() == n + n * 3 + e * 3 + inst.paths.size() * 3);
    for (const Clause& c : inst.clauses) {
        for (int lit : c) {
            CHECK(lit != 0);
            CHECK(std::abs(lit) <= 27);
        }
    }
    // with three colors a path clause names the single excluded color at each vertex
    const Clause& last = inst.clauses.back();
    CHECK(last.size() == 5);
    std::string dimacs = to_dimacs(inst);
    CHECK(dimacs.find("c var 1 = v(0,0) color 0\n") == 0);
    CHECK(dimacs.find("c var 27 = v(2,2) color 2\n") != std::string::npos);
    CHECK(dimacs.find("p cnf 27 " + std::to_string(inst.clauses.size()) + "\n") != std::string::npos);
    CHECK(dimacs.find('\r') == std::string::npos);
    std::size_t clause_lines = 0;
    for (std::size_t pos = dimacs.find("p cnf"); (pos = dimacs.find(" 0\n", pos)) != std::string::npos; ++pos) ++clause_lines;
    CHECK(clause_lines == inst.clauses.size());
}

TEST_CASE("[cnf] two colors make every path clause empty") {
    CnfInstance inst = encode(1, 3, 3, 2);
    bool empty = false;
    for (const Clause& c : inst.clauses) empty = empty || c.empty();
    CHECK(empty);
    CHECK_FALSE(oracle::Dpll(inst.variable_count(), inst.clauses).solve());
}

TEST_CASE("[cnf] known verdicts") {
    CnfInstance unsat = encode(3, 3, 5, 3);
    CHECK_FALSE(oracle::Dpll(unsat.variable_count(), unsat.clauses).solve());
    CnfInstance sat = encode(3, 3, 5, 4);
    auto model = oracle::Dpll(sat.variable_count(), sat.clauses).solve();
    REQUIRE(model);
    CHECK(satisfies(sat, *model));
    Coloring col = decode(sat, *model);
    CHECK(is_proper(col));
    CHECK_FALSE(has_bicolored_path(col, 5));
    CnfInstance single = encode(1, 1, 5, 1);
    CHECK(single.variable_count() == 1);
    auto m1 = oracle::Dpll(1, single.clauses).solve();
    REQUIRE(m1);
    CHECK((*m1)[0] == 1);
}

TEST_CASE("[cnf] decoding") {
    CnfInstance inst = encode(1, 2, 3, 2);
    std::vector<int> model{1, -2, -3, 4};
    CHECK(to_text(decode(inst, model)) == "1 2 2\n0 1\n");
    std::vector<int> twice{1, 2, -3, 4};
    CHECK_THROWS_AS(decode(inst, twice), DecodeError);
    std::vector<int> missing{1, -2, 4};
    CHECK_THROWS_AS(decode(inst, missing), DecodeError);
    std::vector<int> improper{1, -2, 3, -4};
    CHECK_THROWS_AS(decode(inst, improper), DecodeError);
    std::vector<int> range{1, -2, -3, 4, 9};
    CHECK_THROWS_AS(decode(inst, range), DecodeError);
    CnfInstance row = encode(1, 5, 5, 2);
    std::vector<int> alternating{1, -2, -3, 4, 5, -6, -7, 8, 9, -10};
    CHECK_THROWS_AS(decode(row, alternating), DecodeError);
}

TEST_CASE("[cnf] model parsing") {
    CHECK(parse_model("s SATISFIABLE\nv 1 -2 3\nv -4 0\n") == std::vector<int>{1, -2, 3, -4});
    CHECK(parse_model("c comment\n1 -2\n3 0\n") == std::vector<int>{1, -2, 3});
    CHECK_THROWS_AS(parse_model("v 1 x\n"), DecodeError);
}

TEST_CASE("[cnf] verdicts match the solver on the small matrix") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            for (int k = 3; k <= 6; ++k) {
                for (int c = 2; c <= 4; ++c) {
                    CnfInstance inst = encode(m, n, k, c);
                    auto model = oracle::Dpll(inst.variable_count(), inst.clauses).solve();
                    bool solver = feasible(m, n, k, c).status == SearchStatus::Found;
                    CHECK(model.has_value() == solver);
                    if (model) {
                        CHECK(satisfies(inst, *model));
                        CHECK_NOTHROW(decode(inst, *model));
                    }
                }
            }
        }
    }
}

TEST_CASE("[cnf] brute-force clause evaluation on tiny instances") {
    for (int n = 1; n <= 4; ++n) {
        for (int c = 2; c <= 3; ++c) {
            CnfInstance inst = encode(1, n, 3, c);
            int vars = inst.variable_count();
            bool any = false;
            for (std::uint32_t mask = 0; mask < (1u << vars) && !any; ++mask) {
                std::vector<int> model;
                for (int v = 1; v <= vars; ++v) model.push_back(mask & (1u << (v - 1)) ? v : -v);
                any = satisfies(inst, model);
            }
            CHECK(any == oracle::brute_feasible(1, n, 3, c));
        }
    }
}
