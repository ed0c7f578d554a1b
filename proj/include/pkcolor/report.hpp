#pragma once

#include <json.hpp>

#include "pkcolor/boundary.hpp"
#include "pkcolor/cnf.hpp"
#include "pkcolor/paths.hpp"
#include "pkcolor/solver.hpp"
#include "pkcolor/suite.hpp"

namespace pkcolor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "pkcolor-report/1";

Json to_json(Vertex v);
Json to_json(const Coloring& col);
/// Inverse of to_json(Coloring).  Throws std::invalid_argument on malformed input.
Coloring coloring_from_json(const Json& j);

Json to_json(const PathWitness& w);
Json to_json(const SearchStats& s);
Json to_json(const SolveReport& r);
Json to_json(const BicoloredComponent& c);
Json to_json(const PartialWalk& pw);
Json to_json(const WalkReport& r);
Json to_json(const DcTrace& t);
Json to_json(const SuiteResult& r);

/// Envelope shared by every command: schema, command, parameters, result.
Json make_report(const std::string& command, Json parameters, Json result);

}  // namespace pkcolor
