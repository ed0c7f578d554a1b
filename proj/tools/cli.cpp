#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pkcolor/report.hpp"

namespace pkcolor::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot write " + path);
    os << content;
}

Coloring load_coloring(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_coloring(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                         e.what());
    }
}

SearchLimits limits_from(std::uint64_t node_cap, double time_cap) {
    SearchLimits limits;
    limits.node_cap = node_cap;
    limits.time_cap = std::chrono::milliseconds(static_cast<std::int64_t>(time_cap * 1000.0));
    return limits;
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

struct Options {
    int rows = 0;
    int cols = 0;
    int k = 0;
    int colors = 0;
    int max_colors = 8;
    std::uint64_t node_cap = 0;
    double time_cap = 0.0;
    std::string file;
    std::string out;
    std::string model;
    std::string pair;
    bool iterate = false;
    std::string mode = "exhaustive";
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    std::string dump_dir;
};

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.k < 3) throw UsageError("--k must be at least 3");
    SolveReport r = solve_sk(o.rows, o.cols, o.k, limits_from(o.node_cap, o.time_cap), o.max_colors);
    if (r.witness) err << render_ascii(*r.witness);
    Json params{{"rows", o.rows}, {"cols", o.cols}, {"k", o.k}, {"max_colors", o.max_colors},
                {"node_cap", o.node_cap}, {"time_cap", o.time_cap}};
    emit(out, make_report("solve", std::move(params), to_json(r)));
    if (r.witness && !o.out.empty()) write_file(o.out, to_text(*r.witness));
    return r.status == SolveStatus::Proven ? kOk : kTimeout;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.k < 3) throw UsageError("--k must be at least 3");
    Coloring col = load_coloring(o.file);
    err << render_ascii(col);
    Json result;
    bool ok = false;
    if (auto edge = monochromatic_edge(col)) {
        result = Json{{"proper", false},
                      {"pk_free", nullptr},
                      {"monochromatic_edge", Json::array({to_json(edge->first), to_json(edge->second)})}};
    } else if (auto w = has_bicolored_path(col, o.k)) {
        result = Json{{"proper", true}, {"pk_free", false}, {"witness", to_json(*w)}};
    } else {
        ok = true;
        result = Json{{"proper", true}, {"pk_free", true}};
    }
    result["valid"] = ok;
    result["coloring"] = to_json(col);
    emit(out, make_report("verify", Json{{"file", o.file}, {"k", o.k}}, std::move(result)));
    return ok ? kOk : kFailed;
}

int cmd_pattern(const Options& o, std::ostream& out, std::ostream& err) {
    std::optional<Coloring> col = pattern_coloring(o.rows, o.cols, o.k);
    if (!col) throw UsageError("no pattern: rows must be at most k - 3");
    err << render_ascii(*col);
    std::string text = to_text(*col);
    if (!o.out.empty()) write_file(o.out, text);
    Json result{{"coloring", to_json(*col)}, {"text", text}};
    emit(out, make_report("pattern", Json{{"rows", o.rows}, {"cols", o.cols}, {"k", o.k}}, std::move(result)));
    return kOk;
}

std::optional<ColorPair> parse_pair(const std::string& s, int palette) {
    if (s.empty()) return std::nullopt;
    int a = 0;
    int b = 0;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> a >> comma >> b) || comma != ',' || !in.eof()) throw UsageError("--pair expects a,b");
    if (a == b || a < 0 || b < 0 || a >= palette || b >= palette) throw UsageError("--pair out of range");
    return ColorPair(a, b);
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
    Coloring col = load_coloring(o.file);
    err << render_ascii(col);
    std::optional<ColorPair> only = parse_pair(o.pair, col.palette());
    bool proper = is_proper(col);
    std::string skip;
    if (col.palette() != 3) {
        skip = "walk checks need a 3-color palette";
    } else if (!proper) {
        skip = "walk checks need a proper coloring";
    }
    bool clauses_hold = true;
    Json components = Json::array();
    std::vector<ColorPair> pairs = only ? std::vector<ColorPair>{*only} : all_pairs(col.palette());
    for (ColorPair pair : pairs) {
        for (const BicoloredComponent& comp : bicolored_components(col, pair)) {
            Json cj = to_json(comp);
            if (comp.side_touching() && comp.vertices.size() > 1) {
                Json walks = Json::array();
                for (const PartialWalk& pw : partial_walks(comp)) {
                    Json wj = to_json(pw);
                    if (skip.empty() && comp.truly_bicolored && comp.edge_count > 1) {
                        WalkReport lr = check_walk_clauses(col, comp, pw);
                        clauses_hold = clauses_hold && lr.all_hold();
                        wj["clauses"] = to_json(lr);
                    }
                    walks.push_back(std::move(wj));
                }
                cj["partial_walks"] = std::move(walks);
                if (o.iterate && skip.empty() && comp.truly_bicolored && comp.edge_count > 1) {
                    try {
                        cj["iteration"] = to_json(iterate_dc(col, comp, col.grid().vertex_count()));
                    } catch (const DcError& e) {
                        clauses_hold = false;
                        cj["iteration"] = Json{{"error", e.what()}};
                    }
                }
            }
            components.push_back(std::move(cj));
        }
    }
    Json result{{"proper", proper}, {"palette", col.palette()}};
    result["walk_checks"] = skip.empty() ? Json("run") : Json(skip);
    result["components"] = std::move(components);
    Json params{{"file", o.file}, {"iterate", o.iterate}};
    params["pair"] = only ? Json::array({only->first, only->second}) : Json(nullptr);
    emit(out, make_report("analyze", std::move(params), std::move(result)));
    return clauses_hold ? kOk : kFailed;
}

int cmd_lemma_suite(const Options& o, std::ostream& out, std::ostream& err) {
    SuiteOptions so;
    so.rows = o.rows;
    so.cols = o.cols;
    if (o.mode == "exhaustive") {
        so.mode = SuiteMode::Exhaustive;
    } else {
        so.mode = SuiteMode::Random;
        if (!o.seed) throw UsageError("random mode needs --seed");
        if (o.samples == 0) throw UsageError("random mode needs --samples");
        so.samples = o.samples;
        so.seed = *o.seed;
    }
    SuiteResult r;
    try {
        r = run_lemma_suite(so);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!o.dump_dir.empty() && !r.violations.empty()) {
        std::filesystem::create_directories(o.dump_dir);
        for (std::size_t i = 0; i < r.violations.size(); ++i) {
            auto path = std::filesystem::path(o.dump_dir) / ("counterexample-" + std::to_string(i) + ".txt");
            write_file(path.string(), to_text(r.violations[i].coloring));
        }
    }
    err << r.colorings << " colorings, " << r.violation_count << " violations\n";
    Json params{{"rows", o.rows}, {"cols", o.cols}, {"mode", o.mode}};
    if (so.mode == SuiteMode::Random) {
        params["samples"] = o.samples;
        params["seed"] = *o.seed;
    }
    emit(out, make_report("lemma-suite", std::move(params), to_json(r)));
    return r.ok() ? kOk : kFailed;
}

int cmd_cnf(const Options& o, std::ostream& out, std::ostream&) {
    if (o.k < 3) throw UsageError("--k must be at least 3");
    if (o.colors < 1) throw UsageError("--colors must be positive");
    CnfInstance inst = encode(o.rows, o.cols, o.k, o.colors);
    if (!o.out.empty()) write_file(o.out, to_dimacs(inst));
    Json result{{"variables", inst.variable_count()},
                {"clauses", inst.clauses.size()},
                {"expected_clauses", expected_clause_count(inst)},
                {"paths", inst.paths.size()}};
    Json params{{"rows", o.rows}, {"cols", o.cols}, {"k", o.k}, {"colors", o.colors}};
    params["out"] = o.out.empty() ? Json(nullptr) : Json(o.out);
    emit(out, make_report("cnf", std::move(params), std::move(result)));
    return kOk;
}

int cmd_decode(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.k < 3) throw UsageError("--k must be at least 3");
    if (o.colors < 1) throw UsageError("--colors must be positive");
    CnfInstance inst = encode(o.rows, o.cols, o.k, o.colors);
    std::vector<int> model;
    try {
        model = parse_model(read_file(o.model));
    } catch (const DecodeError& e) {
        throw UsageError(o.model + ": " + e.what());
    }
    Json params{{"rows", o.rows}, {"cols", o.cols}, {"k", o.k}, {"colors", o.colors}, {"model", o.model}};
    try {
        Coloring col = decode(inst, model);
        err << render_ascii(col);
        if (!o.out.empty()) write_file(o.out, to_text(col));
        Json result{{"valid", true}, {"satisfies_cnf", satisfies(inst, model)}, {"coloring", to_json(col)}};
        emit(out, make_report("decode", std::move(params), std::move(result)));
        return kOk;
    } catch (const DecodeError& e) {
        err << "decode: " << e.what() << '\n';
        emit(out, make_report("decode", std::move(params), Json{{"valid", false}, {"error", e.what()}}));
        return kFailed;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver, verifier and structural analyzer for P_k-colorings of grid graphs", "pkcolor"};
    app.require_subcommand(1);
    Options o;

    auto grid_flags = [&o](CLI::App* sub) {
        sub->add_option("--rows", o.rows, "Grid rows")->required()->check(CLI::PositiveNumber);
        sub->add_option("--cols", o.cols, "Grid columns")->required()->check(CLI::PositiveNumber);
    };

    CLI::App* solve = app.add_subcommand("solve", "Compute s_k of a grid exactly");
    grid_flags(solve);
    solve->add_option("--k", o.k, "Forbidden bicolored path order")->required();
    solve->add_option("--max-colors", o.max_colors, "Largest color count tried")->check(CLI::Range(1, 100));
    solve->add_option("--node-cap", o.node_cap, "Search nodes per attempt (0 = unlimited)");
    solve->add_option("--time-cap", o.time_cap, "Seconds per attempt (0 = unlimited)")->check(CLI::NonNegativeNumber);
    solve->add_option("--out", o.out, "Write the witness coloring here");

    CLI::App* verify = app.add_subcommand("verify", "Check that a coloring is a P_k-coloring");
    verify->add_option("--file", o.file, "Coloring file")->required();
    verify->add_option("--k", o.k, "Forbidden bicolored path order")->required();

    CLI::App* pattern = app.add_subcommand("pattern", "Emit the periodic 3-coloring for rows <= k - 3");
    grid_flags(pattern);
    pattern->add_option("--k", o.k, "Forbidden bicolored path order")->required();
    pattern->add_option("--out", o.out, "Write the coloring here");

    CLI::App* analyze = app.add_subcommand("analyze", "Bicolored components, partial walks and walk checks");
    analyze->add_option("--file", o.file, "Coloring file")->required();
    analyze->add_option("--pair", o.pair, "Only this color pair, as a,b");
    analyze->add_flag("--iterate", o.iterate, "Trace the component iteration for side-touching components");

    CLI::App* suite = app.add_subcommand("lemma-suite", "Run the structural invariant suite");
    grid_flags(suite);
    suite->add_option("--mode", o.mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    suite->add_option("--samples", o.samples, "Random colorings to draw");
    suite->add_option("--seed", o.seed, "Seed for random mode");
    suite->add_option("--dump-dir", o.dump_dir, "Directory for counterexample colorings");

    CLI::App* cnf = app.add_subcommand("cnf", "Export the feasibility question as DIMACS CNF");
    grid_flags(cnf);
    cnf->add_option("--k", o.k, "Forbidden bicolored path order")->required();
    cnf->add_option("--colors", o.colors, "Number of colors")->required();
    cnf->add_option("--out", o.out, "Write the DIMACS file here");

    CLI::App* dec = app.add_subcommand("decode", "Turn a SAT model into a verified coloring");
    grid_flags(dec);
    dec->add_option("--k", o.k, "Forbidden bicolored path order")->required();
    dec->add_option("--colors", o.colors, "Number of colors")->required();
    dec->add_option("--model", o.model, "Solver output or literal list")->required();
    dec->add_option("--out", o.out, "Write the decoded coloring here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*solve) return cmd_solve(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*pattern) return cmd_pattern(o, out, err);
        if (*analyze) return cmd_analyze(o, out, err);
        if (*suite) return cmd_lemma_suite(o, out, err);
        if (*cnf) return cmd_cnf(o, out, err);
        if (*dec) return cmd_decode(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace pkcolor::cli
