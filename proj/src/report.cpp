#include "pkcolor/report.hpp"

#include <stdexcept>

namespace pkcolor {

Json to_json(Vertex v) { return Json::array({v.row, v.col}); }

namespace {

Json vertex_list(std::span<const Vertex> vs) {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(to_json(v));
    return out;
}

Json pair_json(ColorPair p) { return Json::array({p.first, p.second}); }

Json sides_json(SideSet s) {
    Json out = Json::array();
    for (Side side : s.to_vector()) out.push_back(to_string(side));
    return out;
}

}  // namespace

Json to_json(const Coloring& col) {
    const GridGraph& g = col.grid();
    Json grid = Json::array();
    for (int r = 0; r < g.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < g.cols(); ++c) row.push_back(col.at(Vertex{r, c}));
        grid.push_back(std::move(row));
    }
    return Json{{"rows", g.rows()}, {"cols", g.cols()}, {"palette", col.palette()}, {"grid", std::move(grid)}};
}

Coloring coloring_from_json(const Json& j) {
    try {
        int rows = j.at("rows").get<int>();
        int cols = j.at("cols").get<int>();
        int palette = j.at("palette").get<int>();
        const Json& grid = j.at("grid");
        if (!grid.is_array() || static_cast<int>(grid.size()) != rows) {
            throw std::invalid_argument("grid row count does not match rows");
        }
        std::vector<Color> colors;
        for (const Json& row : grid) {
            if (!row.is_array() || static_cast<int>(row.size()) != cols) {
                throw std::invalid_argument("grid row length does not match cols");
            }
            for (const Json& c : row) colors.push_back(c.get<int>());
        }
        return Coloring(GridGraph(rows, cols), palette, std::move(colors));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed coloring: ") + e.what());
    }
}

Json to_json(const PathWitness& w) {
    return Json{{"pair", pair_json(w.pair)}, {"order", w.order()}, {"vertices", vertex_list(w.vertices)}};
}

Json to_json(const SearchStats& s) {
    return Json{{"nodes", s.nodes},
                {"proper_prunes", s.proper_prunes},
                {"path_prunes", s.path_prunes},
                {"symmetry_prunes", s.symmetry_prunes},
                {"seconds", s.seconds}};
}

Json to_json(const SolveReport& r) {
    Json j{{"status", to_string(r.status)}};
    j["value"] = r.value ? Json(*r.value) : Json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    if (r.certificate) {
        j["certificate"] = Json{{"kind", to_string(r.certificate->kind)},
                                {"colors", r.certificate->colors},
                                {"nodes", r.certificate->nodes}};
    } else {
        j["certificate"] = nullptr;
    }
    Json attempts = Json::array();
    for (const SolveAttempt& a : r.attempts) {
        attempts.push_back(Json{{"colors", a.colors},
                                {"status", to_string(a.status)},
                                {"from_pattern", a.from_pattern},
                                {"stats", to_json(a.stats)}});
    }
    j["attempts"] = std::move(attempts);
    j["stats"] = to_json(r.totals);
    return j;
}

Json to_json(const BicoloredComponent& c) {
    Json j{{"pair", pair_json(c.pair)},
           {"class", to_string(c.kind())},
           {"truly_bicolored", c.truly_bicolored},
           {"size", c.vertices.size()},
           {"edges", c.edge_count},
           {"touched_sides", sides_json(c.classification.touched_sides)},
           {"normalization", to_string(c.classification.normalization)}};
    if (c.classification.opposite_sides) {
        j["opposite_sides"] = Json::array({to_string(c.classification.opposite_sides->first),
                                           to_string(c.classification.opposite_sides->second)});
    }
    j["vertices"] = vertex_list(c.vertices);
    return j;
}

Json to_json(const PartialWalk& pw) {
    std::vector<Vertex> original = pw.original_vertices();
    Json j{{"r", pw.length()}, {"frame", to_string(pw.frame)}, {"vertices", vertex_list(original)}};
    if (pw.length() >= 3) {
        j["angles"] = angle_sequence(pw);
    } else {
        j["angles"] = Json::array();
    }
    return j;
}

Json to_json(const WalkReport& r) {
    Json clauses = Json::array();
    for (std::size_t i = 0; i < r.clauses.size(); ++i) {
        const ClauseResult& c = r.clauses[i];
        Json cj{{"clause", i + 1}, {"holds", c.holds}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (c.location) cj["location"] = to_json(*c.location);
        clauses.push_back(std::move(cj));
    }
    return Json{{"all_hold", r.all_hold()}, {"clauses", std::move(clauses)}};
}

Json to_json(const DcTrace& t) {
    Json steps = Json::array();
    for (const DcStep& s : t.steps) {
        Json sj{{"pair", pair_json(s.component.pair)},
                {"class", to_string(s.component.kind())},
                {"size", s.component.vertices.size()}};
        sj["area"] = s.area ? Json(*s.area) : Json(nullptr);
        if (s.first) sj["first"] = to_json(*s.first);
        if (s.last) sj["last"] = to_json(*s.last);
        Json squares = Json::array();
        for (Cell c : s.squares) squares.push_back(Json::array({c.row, c.col}));
        sj["squares"] = std::move(squares);
        steps.push_back(std::move(sj));
    }
    return Json{{"reached_peripheral", t.reached_peripheral},
                {"areas_decrease", t.areas_decrease()},
                {"steps", std::move(steps)}};
}

Json to_json(const SuiteResult& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) {
        Json vj{{"check", v.check}, {"detail", v.detail}};
        if (v.location) vj["location"] = to_json(*v.location);
        vj["coloring"] = to_text(v.coloring);
        violations.push_back(std::move(vj));
    }
    Json j{{"colorings", r.colorings},
           {"components", r.components},
           {"partial_walks", r.partial_walks},
           {"iterations", r.iterations},
           {"max_iteration_steps", r.max_iteration_steps},
           {"peripheral_instances", r.peripheral_instances}};
    j["peripheral_path_k"] = r.peripheral_path_k ? Json(*r.peripheral_path_k) : Json(nullptr);
    j["violation_count"] = r.violation_count;
    j["violations"] = std::move(violations);
    j["seconds"] = r.seconds;
    return j;
}

Json make_report(const std::string& command, Json parameters, Json result) {
    return Json{{"schema", kReportSchema},
                {"command", command},
                {"parameters", std::move(parameters)},
                {"result", std::move(result)}};
}

}  // namespace pkcolor
