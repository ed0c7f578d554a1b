#include "pkcolor/paths.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pkcolor {

namespace {

// Neighbors in ascending row-major index: N, W, E, S.
std::vector<int> sorted_neighbors(const GridGraph& g, int index) {
    std::vector<int> out;
    for (Vertex w : g.neighbors(g.vertex(index))) out.push_back(g.index(w));
    std::sort(out.begin(), out.end());
    return out;
}

void require_proper(const Coloring& col) {
    if (auto e = monochromatic_edge(col)) {
        throw std::invalid_argument("coloring is not proper: edge " + to_string(e->first) + "-" +
                                    to_string(e->second) + " is monochromatic");
    }
}

// Exhaustive DFS over simple paths inside one bicolored component.
class ComponentSearch {
public:
    ComponentSearch(const Coloring& col, const BicoloredComponent& comp)
        : grid_(col.grid()),
          in_comp_(static_cast<std::size_t>(grid_.vertex_count()), 0),
          on_path_(static_cast<std::size_t>(grid_.vertex_count()), 0),
          adjacency_(static_cast<std::size_t>(grid_.vertex_count())) {
        for (Vertex v : comp.vertices) in_comp_[static_cast<std::size_t>(grid_.index(v))] = 1;
        for (Vertex v : comp.vertices) {
            int i = grid_.index(v);
            for (int w : sorted_neighbors(grid_, i)) {
                if (in_comp_[static_cast<std::size_t>(w)]) adjacency_[static_cast<std::size_t>(i)].push_back(w);
            }
        }
    }

    // First path of exactly `target` vertices in lexicographic order, if any.
    std::optional<std::vector<int>> find_order(std::span<const Vertex> starts, int target) {
        target_ = target;
        for (Vertex s : starts) {
            path_.assign(1, grid_.index(s));
            on_path_[static_cast<std::size_t>(path_[0])] = 1;
            bool found = reach();
            on_path_[static_cast<std::size_t>(path_[0])] = 0;
            if (found) return path_;
        }
        return std::nullopt;
    }

    // Longest path; returns false if the budget ran out.
    bool longest(std::span<const Vertex> starts, std::uint64_t budget, std::uint64_t& expansions,
                 std::vector<int>& best) {
        budget_ = budget;
        expansions_ = &expansions;
        best_ = &best;
        limit_ = static_cast<int>(starts.size());
        for (Vertex s : starts) {
            path_.assign(1, grid_.index(s));
            on_path_[static_cast<std::size_t>(path_[0])] = 1;
            bool ok = explore();
            on_path_[static_cast<std::size_t>(path_[0])] = 0;
            if (!ok) return false;
            if (static_cast<int>(best.size()) == limit_) break;
        }
        return true;
    }

private:
    bool reach() {
        if (static_cast<int>(path_.size()) >= target_) return true;
        for (int w : adjacency_[static_cast<std::size_t>(path_.back())]) {
            if (on_path_[static_cast<std::size_t>(w)]) continue;
            on_path_[static_cast<std::size_t>(w)] = 1;
            path_.push_back(w);
            if (reach()) {
                on_path_[static_cast<std::size_t>(w)] = 0;
                return true;
            }
            path_.pop_back();
            on_path_[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }

    bool explore() {
        if (budget_ != 0 && *expansions_ >= budget_) return false;
        ++*expansions_;
        if (path_.size() > best_->size()) *best_ = path_;
        if (static_cast<int>(best_->size()) == limit_) return true;
        for (int w : adjacency_[static_cast<std::size_t>(path_.back())]) {
            if (on_path_[static_cast<std::size_t>(w)]) continue;
            on_path_[static_cast<std::size_t>(w)] = 1;
            path_.push_back(w);
            bool ok = explore();
            path_.pop_back();
            on_path_[static_cast<std::size_t>(w)] = 0;
            if (!ok) return false;
            if (static_cast<int>(best_->size()) == limit_) return true;
        }
        return true;
    }

    const GridGraph& grid_;
    std::vector<char> in_comp_;
    std::vector<char> on_path_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> path_;
    int target_ = 0;
    std::uint64_t budget_ = 0;
    std::uint64_t* expansions_ = nullptr;
    std::vector<int>* best_ = nullptr;
    int limit_ = 0;
};

PathWitness make_witness(const GridGraph& g, ColorPair pair, const std::vector<int>& path) {
    PathWitness w{pair, {}};
    w.vertices.reserve(path.size());
    for (int i : path) w.vertices.push_back(g.vertex(i));
    return w;
}

}  // namespace

bool witness_valid(const Coloring& col, const PathWitness& w) {
    const GridGraph& g = col.grid();
    if (w.vertices.empty()) return false;
    std::vector<Vertex> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        Vertex v = w.vertices[i];
        if (!g.contains(v) || !w.pair.contains(col.at(v))) return false;
        if (i > 0) {
            if (!g.adjacent(w.vertices[i - 1], v)) return false;
            if (col.at(w.vertices[i - 1]) == col.at(v)) return false;
        }
    }
    return true;
}

std::optional<PathWitness> has_bicolored_path(const Coloring& col, int k) {
    if (k < 3) throw std::invalid_argument("path order k must be at least 3");
    require_proper(col);
    if (k > col.grid().vertex_count()) return std::nullopt;
    for (ColorPair pair : all_pairs(col.palette())) {
        for (const BicoloredComponent& comp : bicolored_components(col, pair)) {
            if (static_cast<int>(comp.vertices.size()) < k) continue;
            ComponentSearch search(col, comp);
            if (auto path = search.find_order(comp.vertices, k)) {
                return make_witness(col.grid(), pair, *path);
            }
        }
    }
    return std::nullopt;
}

LongestPathResult longest_bicolored_path(const Coloring& col, std::uint64_t budget) {
    require_proper(col);
    LongestPathResult result;
    if (col.grid().vertex_count() > 0) result.overall_order = 1;
    for (ColorPair pair : all_pairs(col.palette())) {
        PairLongest entry{pair, 0, false, std::nullopt};
        std::vector<int> best;
        for (const BicoloredComponent& comp : bicolored_components(col, pair)) {
            entry.has_edge = entry.has_edge || comp.truly_bicolored;
            if (static_cast<int>(comp.vertices.size()) <= static_cast<int>(best.size())) continue;
            ComponentSearch search(col, comp);
            std::vector<int> comp_best;
            bool ok = search.longest(comp.vertices, budget, result.expansions, comp_best);
            if (comp_best.size() > best.size()) best = comp_best;
            if (!ok) {
                result.complete = false;
                break;
            }
        }
        entry.order = static_cast<int>(best.size());
        if (!best.empty()) entry.witness = make_witness(col.grid(), pair, best);
        result.overall_order = std::max(result.overall_order, entry.order);
        result.per_pair.push_back(std::move(entry));
        if (!result.complete) break;
    }
    return result;
}

PathPruner::PathPruner(const GridGraph& g)
    : grid_(g),
      adjacency_(static_cast<std::size_t>(g.vertex_count())),
      in_pair_(static_cast<std::size_t>(g.vertex_count()), 0),
      on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (int i = 0; i < g.vertex_count(); ++i) {
        auto nb = sorted_neighbors(g, i);
        auto& slot = adjacency_[static_cast<std::size_t>(i)];
        slot.fill(-1);
        std::copy(nb.begin(), nb.end(), slot.begin());
    }
    members_.reserve(static_cast<std::size_t>(g.vertex_count()));
}

int PathPruner::collect_component(std::span<const std::int8_t> colors, int v, int x, int y) {
    members_.clear();
    members_.push_back(v);
    in_pair_[static_cast<std::size_t>(v)] = 1;
    for (std::size_t head = 0; head < members_.size(); ++head) {
        for (int w : adjacency_[static_cast<std::size_t>(members_[head])]) {
            if (w < 0) break;
            auto c = colors[static_cast<std::size_t>(w)];
            if ((c != x && c != y) || in_pair_[static_cast<std::size_t>(w)]) continue;
            in_pair_[static_cast<std::size_t>(w)] = 1;
            members_.push_back(w);
        }
    }
    return static_cast<int>(members_.size());
}

bool PathPruner::extend(int end, int need) {
    if (need <= 0) return true;
    for (int w : adjacency_[static_cast<std::size_t>(end)]) {
        if (w < 0) break;
        if (!in_pair_[static_cast<std::size_t>(w)] || on_path_[static_cast<std::size_t>(w)]) continue;
        on_path_[static_cast<std::size_t>(w)] = 1;
        bool ok = extend(w, need - 1);
        on_path_[static_cast<std::size_t>(w)] = 0;
        if (ok) return true;
    }
    return false;
}

// Enumerates the first arm root -> ... -> end (length vertices, root
// included) that left the root through root_branches_[first_branch]; at each
// arm, tries a second arm through a later root branch.
bool PathPruner::arm(int end, int length, int first_branch) {
    if (length >= k_) return true;
    for (int j = first_branch + 1; j < root_branch_count_; ++j) {
        int b = root_branches_[static_cast<std::size_t>(j)];
        if (on_path_[static_cast<std::size_t>(b)]) continue;
        on_path_[static_cast<std::size_t>(b)] = 1;
        bool ok = extend(b, k_ - length - 1);
        on_path_[static_cast<std::size_t>(b)] = 0;
        if (ok) return true;
    }
    for (int w : adjacency_[static_cast<std::size_t>(end)]) {
        if (w < 0) break;
        if (!in_pair_[static_cast<std::size_t>(w)] || on_path_[static_cast<std::size_t>(w)]) continue;
        on_path_[static_cast<std::size_t>(w)] = 1;
        bool ok = arm(w, length + 1, first_branch);
        on_path_[static_cast<std::size_t>(w)] = 0;
        if (ok) return true;
    }
    return false;
}

bool PathPruner::check(std::span<const std::int8_t> colors, Vertex v, int k) {
    const int root = grid_.index(v);
    const int x = colors[static_cast<std::size_t>(root)];
    if (x == kUncolored) return true;
    k_ = k;
    std::array<int, 4> tried{};
    int tried_count = 0;
    for (int nb : adjacency_[static_cast<std::size_t>(root)]) {
        if (nb < 0) break;
        const int y = colors[static_cast<std::size_t>(nb)];
        if (y == kUncolored || y == x) continue;
        if (std::find(tried.begin(), tried.begin() + tried_count, y) != tried.begin() + tried_count) continue;
        tried[static_cast<std::size_t>(tried_count++)] = y;

        const int size = collect_component(colors, root, x, y);
        bool violated = false;
        if (size >= k) {
            root_branch_count_ = 0;
            for (int w : adjacency_[static_cast<std::size_t>(root)]) {
                if (w >= 0 && in_pair_[static_cast<std::size_t>(w)]) {
                    root_branches_[static_cast<std::size_t>(root_branch_count_++)] = w;
                }
            }
            on_path_[static_cast<std::size_t>(root)] = 1;
            for (int i = 0; i < root_branch_count_ && !violated; ++i) {
                int b = root_branches_[static_cast<std::size_t>(i)];
                on_path_[static_cast<std::size_t>(b)] = 1;
                violated = arm(b, 2, i);
                on_path_[static_cast<std::size_t>(b)] = 0;
            }
            on_path_[static_cast<std::size_t>(root)] = 0;
        }
        for (int m : members_) in_pair_[static_cast<std::size_t>(m)] = 0;
        if (violated) return false;
    }
    return true;
}

bool incremental_check(const GridGraph& g, std::span<const std::int8_t> colors, Vertex v, int k) {
    PathPruner pruner(g);
    return pruner.check(colors, v, k);
}

}  // namespace pkcolor
