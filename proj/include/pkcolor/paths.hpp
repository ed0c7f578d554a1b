#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pkcolor/coloring.hpp"

namespace pkcolor {

/// A simple path in the grid whose vertices all carry one of two colors.
struct PathWitness {
    ColorPair pair;
    std::vector<Vertex> vertices;

    int order() const { return static_cast<int>(vertices.size()); }
};

/// Re-checks the witness invariants against a coloring: adjacency, distinct
/// vertices, colors within the pair, and strict alternation.
bool witness_valid(const Coloring& col, const PathWitness& w);

/// Exact search for a bicolored path on k vertices.  Returns a witness of
/// order exactly k, preferring the first color pair, then the
/// lexicographically smallest vertex sequence.  Throws if the coloring is
/// improper or k < 3.
std::optional<PathWitness> has_bicolored_path(const Coloring& col, int k);

struct PairLongest {
    ColorPair pair;
    int order = 0;          // 0 when no vertex carries either color
    bool has_edge = false;  // some edge joins the two colors
    std::optional<PathWitness> witness;
};

struct LongestPathResult {
    bool complete = true;  // false when the expansion budget ran out
    std::uint64_t expansions = 0;
    int overall_order = 0;
    std::vector<PairLongest> per_pair;
};

/// Longest bicolored simple path per color pair.  The budget bounds DFS node
/// expansions (0 means unlimited); when it runs out the orders reported are
/// lower bounds and complete is false.
LongestPathResult longest_bicolored_path(const Coloring& col, std::uint64_t budget = 0);

inline constexpr std::int8_t kUncolored = -1;

/// Scratch-buffer holder for repeated incremental checks on one grid.
class PathPruner {
public:
    explicit PathPruner(const GridGraph& g);

    /// True iff no bicolored path on >= k vertices passes through v among the
    /// colored vertices.  Colors are indexed row-major; kUncolored marks
    /// unassigned vertices.  Assumes the colored part is proper.
    bool check(std::span<const std::int8_t> colors, Vertex v, int k);

private:
    int collect_component(std::span<const std::int8_t> colors, int v, int x, int y);
    bool arm(int end, int length, int first_branch);
    bool extend(int end, int need);

    GridGraph grid_;
    int k_ = 0;
    std::vector<std::array<int, 4>> adjacency_;  // ascending vertex index, -1 padded
    std::vector<char> in_pair_;
    std::vector<char> on_path_;
    std::vector<int> members_;
    std::array<int, 4> root_branches_{};
    int root_branch_count_ = 0;
};

/// Partial coloring convenience form of PathPruner::check.
bool incremental_check(const GridGraph& g, std::span<const std::int8_t> colors, Vertex v, int k);

}  // namespace pkcolor
