#pragma once

// JSON/CSV rendering of outcomes. Schema "symramsey.report/1": a top-level
// object holding "schema", "manifest" and the command's result fields. Keys
// are sorted, so identical runs give identical bytes.

#include <optional>
#include <string>

#include "json.hpp"
#include "symramsey/cnf.hpp"
#include "symramsey/largeness.hpp"
#include "symramsey/match.hpp"
#include "symramsey/search.hpp"

namespace symramsey::report {

using nlohmann::json;

inline constexpr const char* kSchema = "symramsey.report/1";

struct Manifest {
    std::string command;
    json params = json::object();
    std::uint64_t seed = 0;
    std::string version;
    unsigned workers = 1;
    /// Only filled with --timing; wall time breaks byte-identical output.
    std::optional<double> wall_time_ms;
};

json to_json(const Manifest& m);
json to_json(const Window& w);
json to_json(const Coloring& c);
json to_json(const SolutionTuple& s);
json to_json(const Witness& w);
json to_json(const SearchStats& s, bool timing);
json to_json(const SearchOutcome& o, bool timing);
json to_json(const RadoResult& r, bool timing);
json to_json(const Verdict& v);
json to_json(const LargenessReport& r);
json to_json(const PullbackComparison& c);
json to_json(const ModelCheck& m);

/// {"window": [lo, hi], "runs": [[a, b], ...]}
json to_json(const FiniteSetWindow& a);
FiniteSetWindow set_from_json(const json& j);

/// Result fields plus schema and manifest.
json assemble(const Manifest& m, json result);

std::string render_json(const json& report);
/// Largeness results: one row per verdict. Anything else: path,value rows.
std::string render_csv(const json& report);

} // namespace symramsey::report
