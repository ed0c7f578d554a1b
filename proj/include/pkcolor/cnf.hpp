#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pkcolor/coloring.hpp"

namespace pkcolor {

using Clause = std::vector<int>;

/// Every simple path on exactly k vertices, each listed once with its
/// smaller endpoint (row-major) first.  DFS order from each start vertex.
std::vector<std::vector<Vertex>> enumerate_paths(const GridGraph& g, int k);

/// One-hot CNF for "a proper c-coloring of the grid with no bicolored P_k".
/// Variable v(row, col, color) = index(row, col) * c + color + 1.
struct CnfInstance {
    int rows = 0;
    int cols = 0;
    int k = 0;
    int colors = 0;
    std::vector<std::vector<Vertex>> paths;
    std::vector<Clause> clauses;

    GridGraph grid() const { return GridGraph(rows, cols); }
    int variable_count() const { return rows * cols * colors; }
    int variable(Vertex v, Color c) const { return (v.row * cols + v.col) * colors + c + 1; }
};

/// Clause families, in emission order: at-least-one color per vertex,
/// pairwise at-most-one per vertex, per edge and color no shared color, and
/// per (path, color pair) some vertex takes a color outside the pair.
CnfInstance encode(int rows, int cols, int k, int colors);

/// N + N*C(c,2) + E*c + P*C(c,2) for the instance's grid and path count.
std::size_t expected_clause_count(const CnfInstance& inst);

/// DIMACS text: "c var <id> = v(<row>,<col>) color <c>" lines, then
/// "p cnf <vars> <clauses>", then one 0-terminated clause per line.
std::string to_dimacs(const CnfInstance& inst);

/// Reads solver output ("s"/"c" lines ignored, "v" lines of literals) or a
/// bare whitespace-separated literal list.  A terminating 0 is dropped.
std::vector<int> parse_model(std::string_view text);

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True iff every clause has a literal made true by the model.
bool satisfies(const CnfInstance& inst, std::span<const int> model);

/// Extracts the coloring, then verifies properness and P_k-freeness.
/// Throws DecodeError on a missing variable, a one-hot violation, or a
/// coloring that fails verification.
Coloring decode(const CnfInstance& inst, std::span<const int> model);

}  // namespace pkcolor
