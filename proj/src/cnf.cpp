#include "pkcolor/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "pkcolor/paths.hpp"

namespace pkcolor {

namespace {

void walk_paths(const GridGraph& g, int k, std::vector<Vertex>& path, std::vector<char>& on_path,
                std::vector<std::vector<Vertex>>& out) {
    if (static_cast<int>(path.size()) == k) {
        if (path.front() < path.back()) out.push_back(path);
        return;
    }
    for (Vertex w : g.neighbors(path.back())) {
        auto& mark = on_path[static_cast<std::size_t>(g.index(w))];
        if (mark) continue;
        mark = 1;
        path.push_back(w);
        walk_paths(g, k, path, on_path, out);
        path.pop_back();
        mark = 0;
    }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_paths(const GridGraph& g, int k) {
    if (k < 3) throw std::invalid_argument("path order k must be at least 3");
    std::vector<std::vector<Vertex>> out;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> path;
    for (int i = 0; i < g.vertex_count(); ++i) {
        path.assign(1, g.vertex(i));
        on_path[static_cast<std::size_t>(i)] = 1;
        walk_paths(g, k, path, on_path, out);
        on_path[static_cast<std::size_t>(i)] = 0;
    }
    return out;
}

CnfInstance encode(int rows, int cols, int k, int colors) {
    if (colors < 1) throw std::invalid_argument("color count must be positive");
    GridGraph g(rows, cols);
    CnfInstance inst{rows, cols, k, colors, enumerate_paths(g, k), {}};
    auto var = [&](Vertex v, Color c) { return inst.variable(v, c); };
    for (int i = 0; i < g.vertex_count(); ++i) {
        Clause alo;
        for (Color c = 0; c < colors; ++c) alo.push_back(var(g.vertex(i), c));
        inst.clauses.push_back(std::move(alo));
    }
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (Color a = 0; a < colors; ++a) {
            for (Color b = a + 1; b < colors; ++b) {
                inst.clauses.push_back({-var(g.vertex(i), a), -var(g.vertex(i), b)});
            }
        }
    }
    for (const auto& [u, v] : g.edges()) {
        for (Color c = 0; c < colors; ++c) inst.clauses.push_back({-var(u, c), -var(v, c)});
    }
    for (const auto& path : inst.paths) {
        for (ColorPair pair : all_pairs(colors)) {
            Clause clause;
            for (Vertex v : path) {
                for (Color c = 0; c < colors; ++c) {
                    if (!pair.contains(c)) clause.push_back(var(v, c));
                }
            }
            inst.clauses.push_back(std::move(clause));
        }
    }
    return inst;
}

std::size_t expected_clause_count(const CnfInstance& inst) {
    const std::size_t n = static_cast<std::size_t>(inst.rows * inst.cols);
    const std::size_t c = static_cast<std::size_t>(inst.colors);
    const std::size_t pairs = c * (c - 1) / 2;
    const std::size_t edges = static_cast<std::size_t>(inst.grid().edge_count());
    return n + n * pairs + edges * c + inst.paths.size() * pairs;
}

std::string to_dimacs(const CnfInstance& inst) {
    std::ostringstream os;
    GridGraph g = inst.grid();
    for (int i = 0; i < g.vertex_count(); ++i) {
        Vertex v = g.vertex(i);
        for (Color c = 0; c < inst.colors; ++c) {
            os << "c var " << inst.variable(v, c) << " = v(" << v.row << ',' << v.col << ") color " << c
               << '\n';
        }
    }
    os << "p cnf " << inst.variable_count() << ' ' << inst.clauses.size() << '\n';
    for (const Clause& clause : inst.clauses) {
        for (int lit : clause) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

std::vector<int> parse_model(std::string_view text) {
    std::vector<int> model;
    std::istringstream lines{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        char lead = line[first];
        if (lead == 'c' || lead == 's') continue;
        if (lead == 'v') line = line.substr(first + 1);
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            char* end = nullptr;
            long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') {
                throw DecodeError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
            }
            if (lit != 0) model.push_back(static_cast<int>(lit));
        }
    }
    return model;
}

bool satisfies(const CnfInstance& inst, std::span<const int> model) {
    std::vector<signed char> value(static_cast<std::size_t>(inst.variable_count()) + 1, 0);
    for (int lit : model) {
        int v = lit < 0 ? -lit : lit;
        if (v <= inst.variable_count()) value[static_cast<std::size_t>(v)] = lit > 0 ? 1 : -1;
    }
    for (const Clause& clause : inst.clauses) {
        bool sat = false;
        for (int lit : clause) {
            int v = lit < 0 ? -lit : lit;
            if ((lit > 0 && value[static_cast<std::size_t>(v)] == 1) ||
                (lit < 0 && value[static_cast<std::size_t>(v)] == -1)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

Coloring decode(const CnfInstance& inst, std::span<const int> model) {
    const int nvars = inst.variable_count();
    std::vector<signed char> value(static_cast<std::size_t>(nvars) + 1, 0);
    for (int lit : model) {
        int v = lit < 0 ? -lit : lit;
        if (v > nvars) throw DecodeError("literal " + std::to_string(lit) + " outside variable range");
        signed char s = lit > 0 ? 1 : -1;
        if (value[static_cast<std::size_t>(v)] != 0 && value[static_cast<std::size_t>(v)] != s) {
            throw DecodeError("variable " + std::to_string(v) + " assigned both ways");
        }
        value[static_cast<std::size_t>(v)] = s;
    }
    GridGraph g = inst.grid();
    std::vector<Color> colors;
    for (int i = 0; i < g.vertex_count(); ++i) {
        Vertex v = g.vertex(i);
        int chosen = -1;
        for (Color c = 0; c < inst.colors; ++c) {
            signed char s = value[static_cast<std::size_t>(inst.variable(v, c))];
            if (s == 0) throw DecodeError("variable " + std::to_string(inst.variable(v, c)) + " unassigned");
            if (s > 0) {
                if (chosen >= 0) {
                    throw DecodeError("vertex " + to_string(v) + " has colors " + std::to_string(chosen) +
                                      " and " + std::to_string(c));
                }
                chosen = c;
            }
        }
        if (chosen < 0) throw DecodeError("vertex " + to_string(v) + " has no color");
        colors.push_back(chosen);
    }
    Coloring col(g, inst.colors, std::move(colors));
    if (auto e = monochromatic_edge(col)) {
        throw DecodeError("decoded coloring is improper at " + to_string(e->first) + "-" +
                          to_string(e->second));
    }
    if (inst.k <= g.vertex_count()) {
        if (auto w = has_bicolored_path(col, inst.k)) {
            throw DecodeError("decoded coloring contains a bicolored path starting at " +
                              to_string(w->vertices.front()));
        }
    }
    return col;
}

}  // namespace pkcolor
