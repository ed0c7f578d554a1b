#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkcolor/coloring.hpp"

namespace pkcolor {

struct SearchLimits {
    std::uint64_t node_cap = 0;            // 0 = unlimited
    std::chrono::milliseconds time_cap{0};  // 0 = unlimited
};

/// Each rule can be switched off independently; none of them changes a verdict.
struct SymmetryBreaking {
    /// Color j may be used only after color j-1 has been used.
    bool canonical_colors = true;
    /// Once the first row (and, on square grids, the first column) is fully
    /// assigned, reject it if a grid symmetry yields a lexicographically
    /// smaller canonical first row.
    bool first_row_leader = true;
};

enum class SearchStatus { Found, Exhausted, Timeout };

std::string to_string(SearchStatus s);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t proper_prunes = 0;
    std::uint64_t path_prunes = 0;
    std::uint64_t symmetry_prunes = 0;
    double seconds = 0.0;

    SearchStats& operator+=(const SearchStats& o);
};

struct FeasibilityResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Coloring> witness;
    SearchStats stats;
};

/// Looks for a proper coloring of the rows x cols grid with `colors` colors
/// and no bicolored path on k vertices (no path constraint when k is empty).
/// Branches in row-major order over ascending colors, pruning by properness
/// and by an incremental bicolored-path check after every assignment.
FeasibilityResult feasible(int rows, int cols, std::optional<int> k, int colors,
                           const SearchLimits& limits = {},
                           const SymmetryBreaking& symmetry = {});

enum class SolveStatus { Proven, Timeout };
enum class CertificateKind { Exhausted, Trivial };

std::string to_string(SolveStatus s);
std::string to_string(CertificateKind c);

/// Why value - 1 colors do not suffice.
struct InfeasibilityCertificate {
    CertificateKind kind = CertificateKind::Trivial;
    int colors = 0;
    std::uint64_t nodes = 0;
};

struct SolveAttempt {
    int colors = 0;
    SearchStatus status = SearchStatus::Exhausted;
    SearchStats stats;
    bool from_pattern = false;
};

struct SolveReport {
    int rows = 0;
    int cols = 0;
    std::optional<int> k;
    SolveStatus status = SolveStatus::Timeout;
    std::optional<int> value;
    std::optional<Coloring> witness;
    std::optional<InfeasibilityCertificate> certificate;
    std::vector<SolveAttempt> attempts;
    SearchStats totals;
};

/// Smallest c for which feasible() succeeds, trying c = 1, 2, ... up to
/// max_colors.  Limits apply to each attempt.  A timeout anywhere leaves
/// status = Timeout and no value.
SolveReport solve_sk(int rows, int cols, std::optional<int> k, const SearchLimits& limits = {},
                     int max_colors = 8);

/// Periodic 3-coloring whose column j alternates the colors j mod 3 and
/// (j+1) mod 3.  Only offered when rows <= k - 3, where every bicolored path
/// stays within one column plus one step on each side.
std::optional<Coloring> pattern_coloring(int rows, int cols, int k);

class SolveTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InequalityChain {
    int chi = 0;
    int s_k = 0;
    int s_4 = 0;
    int s_3 = 0;

    bool nondecreasing() const { return chi <= s_k && s_k <= s_4 && s_4 <= s_3; }
};

/// (chromatic number, s_k, s_4, s_3) of the grid.  Requires k >= 4; throws
/// SolveTimeout if any solve does not finish within the limits.
InequalityChain inequality_chain(int rows, int cols, int k, const SearchLimits& limits = {});

}  // namespace pkcolor
