#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pkcolor/coloring.hpp"

namespace pkcolor {

/// Calls fn on every proper 3-coloring of the grid in lexicographic
/// row-major order.  Stops early when fn returns false.
void for_each_proper_3coloring(int rows, int cols, const std::function<bool(const Coloring&)>& fn);

/// Greedy random proper 3-coloring: row-major, each vertex drawn uniformly
/// from the colors not used by its upper and left neighbors.
Coloring random_proper_3coloring(int rows, int cols, std::mt19937_64& rng);

enum class SuiteMode { Exhaustive, Random };

struct SuiteOptions {
    int rows = 3;
    int cols = 3;
    SuiteMode mode = SuiteMode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Exhaustive mode refuses grids with more vertices than this.
    int exhaustive_limit = 12;
    /// Counterexamples kept in full; further ones are only counted.
    std::size_t keep_violations = 20;
};

struct Violation {
    std::string check;  // "walk.1" .. "walk.5", "angle-count", "squares", "iteration", ...
    std::string detail;
    Coloring coloring;
    std::optional<Vertex> location;
};

struct SuiteResult {
    std::uint64_t colorings = 0;
    std::uint64_t components = 0;        // truly bicolored side-touching components examined
    std::uint64_t partial_walks = 0;
    std::uint64_t iterations = 0;        // iterate_dc runs
    int max_iteration_steps = 0;
    std::uint64_t peripheral_instances = 0; // colorings with a peripheral component
    std::optional<int> peripheral_path_k;        // path order used, square grids only
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;
    double seconds = 0.0;
    bool ok() const { return violation_count == 0; }
};

/// Runs every structural check on one proper 3-coloring.  Counts go into
/// tally, which keeps at most `keep` counterexamples; returns the number found.
std::uint64_t check_coloring(const Coloring& col, SuiteResult& tally, std::size_t keep);

/// Throws std::invalid_argument for an oversized exhaustive run or a random
/// run with no samples.
SuiteResult run_lemma_suite(const SuiteOptions& options);

}  // namespace pkcolor
