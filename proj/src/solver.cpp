#include "pkcolor/solver.hpp"

#include <algorithm>
#include <array>

#include "pkcolor/paths.hpp"

namespace pkcolor {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

std::string to_string(SolveStatus s) { return s == SolveStatus::Proven ? "proven" : "timeout"; }

std::string to_string(CertificateKind c) {
    return c == CertificateKind::Exhausted ? "exhausted-search" : "trivial";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    proper_prunes += o.proper_prunes;
    path_prunes += o.path_prunes;
    symmetry_prunes += o.symmetry_prunes;
    seconds += o.seconds;
    return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

// Relabels colors by first occurrence.
template <typename It>
std::vector<int> canonical(It first, It last) {
    std::array<int, 128> relabel;
    relabel.fill(-1);
    int next = 0;
    std::vector<int> out;
    for (It it = first; it != last; ++it) {
        int& slot = relabel[static_cast<std::size_t>(*it)];
        if (slot < 0) slot = next++;
        out.push_back(slot);
    }
    return out;
}

class Search {
public:
    Search(int rows, int cols, std::optional<int> k, int colors, const SearchLimits& limits,
           const SymmetryBreaking& symmetry)
        : grid_(rows, cols),
          k_(k),
          palette_(colors),
          limits_(limits),
          symmetry_(symmetry),
          pruner_(grid_),
          colors_(static_cast<std::size_t>(grid_.vertex_count()), kUncolored),
          start_(Clock::now()) {}

    FeasibilityResult run() {
        FeasibilityResult result;
        const bool found = assign(0, -1);
        result.stats = stats_;
        result.stats.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        if (found) {
            result.status = SearchStatus::Found;
            result.witness = Coloring(grid_, palette_, std::vector<Color>(colors_.begin(), colors_.end()));
        } else {
            result.status = timed_out_ ? SearchStatus::Timeout : SearchStatus::Exhausted;
        }
        return result;
    }

private:
    bool out_of_budget() {
        if (timed_out_) return true;
        if (limits_.node_cap != 0 && stats_.nodes >= limits_.node_cap) timed_out_ = true;
        if (limits_.time_cap.count() > 0 && (stats_.nodes & 0xfff) == 0 &&
            Clock::now() - start_ > limits_.time_cap) {
            timed_out_ = true;
        }
        return timed_out_;
    }

    bool symmetry_ok(int index) {
        if (!symmetry_.first_row_leader) return true;
        const int m = grid_.rows();
        const int n = grid_.cols();
        auto row0_begin = colors_.begin();
        auto row0_end = colors_.begin() + n;
        if (index == n - 1 && n > 1) {
            auto base = canonical(row0_begin, row0_end);
            std::vector<std::int8_t> reversed(row0_begin, row0_end);
            std::reverse(reversed.begin(), reversed.end());
            if (canonical(reversed.begin(), reversed.end()) < base) return false;
        }
        if (m == n && m > 1 && index == (m - 1) * n) {
            auto base = canonical(row0_begin, row0_end);
            std::vector<std::int8_t> column;
            for (int r = 0; r < m; ++r) column.push_back(colors_[static_cast<std::size_t>(r * n)]);
            if (canonical(column.begin(), column.end()) < base) return false;    // transpose
            std::reverse(column.begin(), column.end());
            if (canonical(column.begin(), column.end()) < base) return false;    // rotate90
        }
        return true;
    }

    bool assign(int index, int max_used) {
        if (index == grid_.vertex_count()) return true;
        const Vertex v = grid_.vertex(index);
        const int north = v.row > 0 ? colors_[static_cast<std::size_t>(index - grid_.cols())] : kUncolored;
        const int west = v.col > 0 ? colors_[static_cast<std::size_t>(index - 1)] : kUncolored;
        const int top = symmetry_.canonical_colors ? std::min(palette_ - 1, max_used + 1) : palette_ - 1;
        for (int x = 0; x <= top; ++x) {
            if (x == north || x == west) {
                ++stats_.proper_prunes;
                continue;
            }
            if (out_of_budget()) return false;
            ++stats_.nodes;
            colors_[static_cast<std::size_t>(index)] = static_cast<std::int8_t>(x);
            if (k_ && !pruner_.check(colors_, v, *k_)) {
                ++stats_.path_prunes;
                continue;
            }
            if (!symmetry_ok(index)) {
                ++stats_.symmetry_prunes;
                continue;
            }
            if (assign(index + 1, std::max(max_used, x))) return true;
            if (timed_out_) break;
        }
        colors_[static_cast<std::size_t>(index)] = kUncolored;
        return false;
    }

    GridGraph grid_;
    std::optional<int> k_;
    int palette_;
    SearchLimits limits_;
    SymmetryBreaking symmetry_;
    PathPruner pruner_;
    std::vector<std::int8_t> colors_;
    SearchStats stats_;
    Clock::time_point start_;
    bool timed_out_ = false;
};

void validate(int rows, int cols, std::optional<int> k) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (k && *k < 3) throw std::invalid_argument("path order k must be at least 3");
}

}  // namespace

FeasibilityResult feasible(int rows, int cols, std::optional<int> k, int colors,
                           const SearchLimits& limits, const SymmetryBreaking& symmetry) {
    validate(rows, cols, k);
    if (colors < 1 || colors > 100) throw std::invalid_argument("color count must be in 1..100");
    return Search(rows, cols, k, colors, limits, symmetry).run();
}

std::optional<Coloring> pattern_coloring(int rows, int cols, int k) {
    validate(rows, cols, k);
    if (rows > k - 3) return std::nullopt;
    std::vector<Color> colors;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) colors.push_back((c + r % 2) % 3);
    }
    return Coloring(GridGraph(rows, cols), 3, std::move(colors));
}

SolveReport solve_sk(int rows, int cols, std::optional<int> k, const SearchLimits& limits,
                     int max_colors) {
    validate(rows, cols, k);
    SolveReport report;
    report.rows = rows;
    report.cols = cols;
    report.k = k;
    std::optional<Coloring> pattern = k ? pattern_coloring(rows, cols, *k) : std::nullopt;
    std::optional<SolveAttempt> last_infeasible;

    for (int c = 1; c <= max_colors; ++c) {
        if (pattern && c == 3) {
            report.attempts.push_back(SolveAttempt{3, SearchStatus::Found, {}, true});
            report.status = SolveStatus::Proven;
            report.value = 3;
            report.witness = pattern;
            break;
        }
        FeasibilityResult r = feasible(rows, cols, k, c, limits);
        report.totals += r.stats;
        report.attempts.push_back(SolveAttempt{c, r.status, r.stats, false});
        if (r.status == SearchStatus::Timeout) {
            report.status = SolveStatus::Timeout;
            return report;
        }
        if (r.status == SearchStatus::Found) {
            report.status = SolveStatus::Proven;
            report.value = c;
            report.witness = std::move(r.witness);
            break;
        }
        last_infeasible = report.attempts.back();
    }
    if (!report.value) {
        // No coloring up to max_colors: the search did not settle the value.
        report.status = SolveStatus::Timeout;
        return report;
    }
    if (*report.value == 1) {
        report.certificate = InfeasibilityCertificate{CertificateKind::Trivial, 0, 0};
    } else {
        report.certificate = InfeasibilityCertificate{CertificateKind::Exhausted, last_infeasible->colors,
                                                      last_infeasible->stats.nodes};
    }
    return report;
}

InequalityChain inequality_chain(int rows, int cols, int k, const SearchLimits& limits) {
    if (k < 4) throw std::invalid_argument("inequality chain needs k >= 4");
    auto value = [&](std::optional<int> order) {
        SolveReport r = solve_sk(rows, cols, order, limits, 12);
        if (r.status != SolveStatus::Proven) throw SolveTimeout("solve did not finish within limits");
        return *r.value;
    };
    return InequalityChain{value(std::nullopt), value(k), value(4), value(3)};
}

}  // namespace pkcolor
