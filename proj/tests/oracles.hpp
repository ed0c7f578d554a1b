#pragma once

// Independent reference implementations used only by the tests.  They share
// nothing with the library beyond the Coloring and GridGraph value types.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "pkcolor/coloring.hpp"

namespace oracle {

using pkcolor::Coloring;
using pkcolor::GridGraph;
using pkcolor::Vertex;

inline std::vector<int> plain_neighbors(int rows, int cols, int i) {
    int r = i / cols;
    int c = i % cols;
    std::vector<int> out;
    if (r > 0) out.push_back(i - cols);
    if (r + 1 < rows) out.push_back(i + cols);
    if (c > 0) out.push_back(i - 1);
    if (c + 1 < cols) out.push_back(i + 1);
    return out;
}

/// Visits every simple path (as an index sequence, both orientations) with
/// exactly k vertices.  The visitor returns false to stop.
inline void all_simple_paths(int rows, int cols, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    int n = rows * cols;
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    bool stop = false;
    std::function<void()> grow = [&] {
        if (stop) return;
        if (static_cast<int>(path.size()) == k) {
            if (!visit(path)) stop = true;
            return;
        }
        for (int w : plain_neighbors(rows, cols, path.back())) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            grow();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = false;
            if (stop) return;
        }
    };
    for (int s = 0; s < n && !stop; ++s) {
        path = {s};
        used[static_cast<std::size_t>(s)] = true;
        grow();
        used[static_cast<std::size_t>(s)] = false;
    }
}

/// Number of simple k-vertex paths counted as undirected objects.
inline std::uint64_t count_paths(int rows, int cols, int k) {
    std::uint64_t directed = 0;
    all_simple_paths(rows, cols, k, [&](const std::vector<int>&) {
        ++directed;
        return true;
    });
    return directed / 2;
}

/// Any path on k vertices whose colors span at most two values.
inline bool naive_bicolored_path(const std::vector<int>& colors, int rows, int cols, int k) {
    if (k > rows * cols) return false;
    bool found = false;
    all_simple_paths(rows, cols, k, [&](const std::vector<int>& p) {
        std::set<int> seen;
        for (int i : p) seen.insert(colors[static_cast<std::size_t>(i)]);
        if (seen.size() <= 2) found = true;
        return !found;
    });
    return found;
}

inline bool naive_bicolored_path(const Coloring& col, int k) {
    std::vector<int> colors(col.colors().begin(), col.colors().end());
    return naive_bicolored_path(colors, col.grid().rows(), col.grid().cols(), k);
}

inline bool naive_proper(const std::vector<int>& colors, int rows, int cols) {
    for (int i = 0; i < rows * cols; ++i) {
        for (int w : plain_neighbors(rows, cols, i)) {
            if (colors[static_cast<std::size_t>(i)] == colors[static_cast<std::size_t>(w)]) return false;
        }
    }
    return true;
}

/// Visits every assignment of c colors to the grid that is proper, in
/// lexicographic order.  Properness is the only pruning.
inline void proper_colorings(int rows, int cols, int c, const std::function<bool(const std::vector<int>&)>& visit) {
    int n = rows * cols;
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    bool stop = false;
    std::function<void(int)> assign = [&](int i) {
        if (stop) return;
        if (i == n) {
            if (!visit(colors)) stop = true;
            return;
        }
        for (int x = 0; x < c && !stop; ++x) {
            if (i % cols > 0 && colors[static_cast<std::size_t>(i - 1)] == x) continue;
            if (i >= cols && colors[static_cast<std::size_t>(i - cols)] == x) continue;
            colors[static_cast<std::size_t>(i)] = x;
            assign(i + 1);
        }
        colors[static_cast<std::size_t>(i)] = -1;
    };
    assign(0);
}

/// Exists a proper c-coloring with no bicolored P_k (no path condition when k is empty).
inline bool brute_feasible(int rows, int cols, std::optional<int> k, int c) {
    bool found = false;
    proper_colorings(rows, cols, c, [&](const std::vector<int>& colors) {
        if (!k || !naive_bicolored_path(colors, rows, cols, *k)) found = true;
        return !found;
    });
    return found;
}

inline int brute_sk(int rows, int cols, std::optional<int> k, int max_colors = 8) {
    for (int c = 1; c <= max_colors; ++c) {
        if (brute_feasible(rows, cols, k, c)) return c;
    }
    return -1;
}

/// Longest simple path whose vertices carry only colors a and b.
inline int naive_longest(const Coloring& col, int a, int b) {
    int rows = col.grid().rows();
    int cols = col.grid().cols();
    int n = rows * cols;
    auto ok = [&](int i) { return col.at(i) == a || col.at(i) == b; };
    int best = 0;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<void(int, int)> grow = [&](int v, int len) {
        best = std::max(best, len);
        for (int w : plain_neighbors(rows, cols, v)) {
            if (used[static_cast<std::size_t>(w)] || !ok(w)) continue;
            used[static_cast<std::size_t>(w)] = true;
            grow(w, len + 1);
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        if (!ok(s)) continue;
        used[static_cast<std::size_t>(s)] = true;
        grow(s, 1);
        used[static_cast<std::size_t>(s)] = false;
    }
    return best;
}

/// Plain DPLL with unit propagation.  Returns a model (one literal per
/// variable) or nothing when unsatisfiable.
class Dpll {
public:
    Dpll(int variables, std::vector<std::vector<int>> clauses)
        : n_(variables), clauses_(std::move(clauses)), value_(static_cast<std::size_t>(variables) + 1, 0),
          occurs_(static_cast<std::size_t>(2 * variables) + 2) {
        for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
            for (int lit : clauses_[ci]) occurs_[slot(-lit)].push_back(ci);
        }
    }

    std::optional<std::vector<int>> solve() {
        for (const auto& cl : clauses_) {
            if (cl.empty()) return std::nullopt;
        }
        std::vector<int> trail;
        for (const auto& cl : clauses_) {
            if (cl.size() == 1 && !assign(cl[0], trail)) return std::nullopt;
        }
        if (!search(trail)) return std::nullopt;
        std::vector<int> model;
        for (int v = 1; v <= n_; ++v) model.push_back(value_[static_cast<std::size_t>(v)] >= 0 ? v : -v);
        return model;
    }

private:
    std::size_t slot(int lit) const { return static_cast<std::size_t>(lit > 0 ? 2 * lit : -2 * lit + 1); }
    int val(int lit) const {
        int v = value_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    // Sets lit true and propagates; records assignments on the trail.
    bool assign(int lit, std::vector<int>& trail) {
        std::vector<int> queue{lit};
        while (!queue.empty()) {
            int l = queue.back();
            queue.pop_back();
            if (val(l) == 1) continue;
            if (val(l) == -1) return false;
            value_[static_cast<std::size_t>(std::abs(l))] = l > 0 ? 1 : -1;
            trail.push_back(l);
            for (std::size_t ci : occurs_[slot(l)]) {
                int unassigned = 0;
                int last = 0;
                bool sat = false;
                for (int x : clauses_[ci]) {
                    int vx = val(x);
                    if (vx == 1) {
                        sat = true;
                        break;
                    }
                    if (vx == 0) {
                        ++unassigned;
                        last = x;
                    }
                }
                if (sat) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) queue.push_back(last);
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            value_[static_cast<std::size_t>(std::abs(trail.back()))] = 0;
            trail.pop_back();
        }
    }

    bool search(std::vector<int>& trail) {
        int pick = 0;
        for (int v = 1; v <= n_; ++v) {
            if (value_[static_cast<std::size_t>(v)] == 0) {
                pick = v;
                break;
            }
        }
        if (pick == 0) return true;
        for (int lit : {pick, -pick}) {
            std::size_t mark = trail.size();
            if (assign(lit, trail) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> clauses_;
    std::vector<int> value_;
    std::vector<std::vector<std::size_t>> occurs_;
};

}  // namespace oracle
