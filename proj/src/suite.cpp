#include "pkcolor/suite.hpp"

#include <chrono>
#include <stdexcept>

#include "pkcolor/boundary.hpp"
#include "pkcolor/paths.hpp"

namespace pkcolor {

namespace {

bool enumerate(const GridGraph& g, std::vector<Color>& colors, int index,
               const std::function<bool(const Coloring&)>& fn) {
    if (index == g.vertex_count()) return fn(Coloring(g, 3, colors));
    Vertex v = g.vertex(index);
    for (Color c = 0; c < 3; ++c) {
        if (v.row > 0 && colors[static_cast<std::size_t>(index - g.cols())] == c) continue;
        if (v.col > 0 && colors[static_cast<std::size_t>(index - 1)] == c) continue;
        colors[static_cast<std::size_t>(index)] = c;
        if (!enumerate(g, colors, index + 1, fn)) return false;
    }
    return true;
}

struct Recorder {
    const Coloring& col;
    SuiteResult& tally;
    std::size_t keep;
    std::uint64_t found = 0;

    void add(std::string check, std::string detail, std::optional<Vertex> location = std::nullopt) {
        ++found;
        ++tally.violation_count;
        if (tally.violations.size() < keep) {
            tally.violations.push_back(Violation{std::move(check), std::move(detail), col, location});
        }
    }
};

void check_neighbor_colors(const BicoloredComponent& comp, const Coloring& col, Recorder& rec) {
    const GridGraph& g = col.grid();
    for (Vertex v : comp.vertices) {
        for (Vertex w : g.neighbors(v)) {
            if (comp.contains(w)) continue;
            Color c = col.at(w);
            if (comp.pair.contains(c)) {
                rec.add("maximality", "neighbor " + to_string(w) + " carries a pair color", w);
            } else if (comp.truly_bicolored && col.palette() == 3 && c != 3 - comp.pair.first - comp.pair.second) {
                rec.add("third-color", "neighbor " + to_string(w) + " is not third-colored", w);
            }
        }
    }
}

void check_walk(const Coloring& col, const BicoloredComponent& comp, const PartialWalk& pw,
                Recorder& rec) {
    WalkReport report = check_walk_clauses(col, comp, pw);
    for (std::size_t i = 0; i < report.clauses.size(); ++i) {
        const ClauseResult& c = report.clauses[i];
        if (!c.holds) rec.add("walk." + std::to_string(i + 1), c.detail, c.location);
    }
    if (!report.all_hold()) return;
    std::vector<int> angles = angle_sequence(pw);
    int right_angles = 0;
    for (int a : angles) right_angles += a == 90 ? 1 : 0;
    if (right_angles != (pw.length() - 1) / 2) {
        rec.add("angle-count", std::to_string(right_angles) + " right angles on a walk of " +
                                   std::to_string(pw.length()) + " vertices",
                pw.to_original(pw.first()));
    }
    try {
        DcConstruction dc = derive_dc(col, comp, pw);
        if (dc.squares.empty()) rec.add("squares", "no unit squares for the walk", pw.to_original(pw.first()));
    } catch (const DcError& e) {
        rec.add("derive-dc", e.what(), e.location());
    }
}

}  // namespace

void for_each_proper_3coloring(int rows, int cols, const std::function<bool(const Coloring&)>& fn) {
    GridGraph g(rows, cols);
    std::vector<Color> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    enumerate(g, colors, 0, fn);
}

Coloring random_proper_3coloring(int rows, int cols, std::mt19937_64& rng) {
    GridGraph g(rows, cols);
    std::vector<Color> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 0; i < g.vertex_count(); ++i) {
        Vertex v = g.vertex(i);
        std::vector<Color> allowed;
        for (Color c = 0; c < 3; ++c) {
            if (v.row > 0 && colors[static_cast<std::size_t>(i - cols)] == c) continue;
            if (v.col > 0 && colors[static_cast<std::size_t>(i - 1)] == c) continue;
            allowed.push_back(c);
        }
        std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
        colors[static_cast<std::size_t>(i)] = allowed[pick(rng)];
    }
    return Coloring(g, 3, std::move(colors));
}

std::uint64_t check_coloring(const Coloring& col, SuiteResult& tally, std::size_t keep) {
    Recorder rec{col, tally, keep};
    const GridGraph& g = col.grid();
    bool has_peripheral = false;
    for (ColorPair pair : all_pairs(3)) {
        for (const BicoloredComponent& comp : bicolored_components(col, pair)) {
            check_neighbor_colors(comp, col, rec);
            if (!comp.truly_bicolored || !comp.side_touching()) continue;
            if (comp.kind() == ComponentClass::Peripheral) has_peripheral = true;
            ++tally.components;
            if (comp.edge_count == 1) {
                rec.add("walk.1", "component is a single edge", comp.vertices.front());
                continue;
            }
            for (const PartialWalk& pw : partial_walks(comp)) {
                ++tally.partial_walks;
                check_walk(col, comp, pw, rec);
            }
            try {
                DcTrace trace = iterate_dc(col, comp, g.vertex_count());
                ++tally.iterations;
                int steps = static_cast<int>(trace.steps.size());
                if (steps > tally.max_iteration_steps) tally.max_iteration_steps = steps;
                if (!trace.reached_peripheral) {
                    rec.add("iteration", "no peripheral component within " + std::to_string(g.vertex_count()) +
                                             " steps",
                            comp.vertices.front());
                } else if (!trace.areas_decrease()) {
                    rec.add("area", "enclosed area does not shrink over two steps", comp.vertices.front());
                }
            } catch (const DcError& e) {
                rec.add("iteration", e.what(), e.location());
            } catch (const std::exception& e) {
                rec.add("iteration", e.what(), comp.vertices.front());
            }
        }
    }
    if (g.is_square() && g.rows() >= 3) {
        int k = g.rows() + 2;
        tally.peripheral_path_k = k;
        if (has_peripheral) {
            ++tally.peripheral_instances;
            if (!has_bicolored_path(col, k)) {
                rec.add("peripheral-path", "peripheral component without a bicolored path on " + std::to_string(k) +
                                       " vertices");
            }
        }
    }
    return rec.found;
}

SuiteResult run_lemma_suite(const SuiteOptions& options) {
    GridGraph g(options.rows, options.cols);
    auto start = std::chrono::steady_clock::now();
    SuiteResult result;
    if (options.mode == SuiteMode::Exhaustive) {
        if (g.vertex_count() > options.exhaustive_limit) {
            throw std::invalid_argument("exhaustive mode is limited to " +
                                        std::to_string(options.exhaustive_limit) + " vertices");
        }
        for_each_proper_3coloring(options.rows, options.cols, [&](const Coloring& col) {
            ++result.colorings;
            check_coloring(col, result, options.keep_violations);
            return true;
        });
    } else {
        if (options.samples == 0) throw std::invalid_argument("random mode needs a positive sample count");
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t i = 0; i < options.samples; ++i) {
            Coloring col = random_proper_3coloring(options.rows, options.cols, rng);
            ++result.colorings;
            check_coloring(col, result, options.keep_violations);
        }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace pkcolor
