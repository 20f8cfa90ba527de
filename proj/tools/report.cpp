#include "report.hpp"

#include <sstream>

#include "symramsey/error.hpp"

namespace symramsey::report {

json to_json(const Manifest& m) {
    return {{"command", m.command},
            {"params", m.params},
            {"seed", m.seed},
            {"version", m.version},
            {"workers", m.workers},
            {"wall_time_ms", m.wall_time_ms ? json(*m.wall_time_ms) : json(nullptr)}};
}

json to_json(const Window& w) { return json::array({w.lo, w.hi}); }

json to_json(const Coloring& c) {
    return {{"window", to_json(c.window())}, {"r", c.colors()}, {"classes", c.classes()}};
}

json to_json(const SolutionTuple& s) {
    json vars = json::array();
    for (const auto& [name, v] : s.assignment)
        vars.push_back(json::array({name, v}));
    return {{"assignment", vars}, {"occupied", s.occupied}};
}

json to_json(const Witness& w) {
    return {{"pattern", w.pattern}, {"window", to_json(w.window)}, {"color", w.color}, {"solution", to_json(w.solution)}};
}

json to_json(const SearchStats& s, bool timing) {
    return {{"nodes", s.nodes},
            {"max_depth", s.max_depth},
            {"tuples", s.tuples},
            {"elapsed_ms", timing ? json(s.elapsed_ms) : json(nullptr)}};
}

json to_json(const SearchOutcome& o, bool timing) {
    return {{"pattern", o.pattern},
            {"r", o.r},
            {"n", o.n},
            {"domain", to_string(o.domain)},
            {"outcome", o.avoidable ? "avoidable" : "unavoidable"},
            {"coloring", o.coloring ? to_json(*o.coloring) : json(nullptr)},
            {"stats", to_json(o.stats, timing)}};
}

json to_json(const RadoResult& r, bool timing) {
    return {{"pattern", r.pattern},
            {"r", r.r},
            {"n_max", r.n_max},
            {"domain", to_string(r.domain)},
            {"status", r.number ? "found" : "bound-exceeded"},
            {"n_star", r.number ? json(*r.number) : json(nullptr)},
            {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)},
            {"avoidable_by_n", r.avoidable_by_n},
            {"stats", r.number ? to_json(r.unavoidable_stats, timing) : json(nullptr)}};
}

json to_json(const Verdict& v) {
    return {{"holds", v.holds},
            {"witness", v.witness},
            {"counterexample", v.counterexample ? json(*v.counterexample) : json(nullptr)},
            {"note", v.note}};
}

json to_json(const LargenessReport& r) {
    json j = {{"structure", r.structure},
              {"window", to_json(r.window)},
              {"interior", r.interior ? to_json(*r.interior) : json(nullptr)},
              {"params", {{"g", r.params.gap}, {"L", r.params.run}, {"m", r.params.translate_bound}}},
              {"translates", r.translates},
              {"thick", to_json(r.thick)},
              {"syndetic", to_json(r.syndetic)},
              {"pws", to_json(r.pws)},
              {"proxy", r.proxy}};
    if (r.star)
        j["star"] = {{"l", r.star->l()}, {"k", r.star->k()}};
    if (r.implied_additive_pws)
        j["implied_additive_pws"] = *r.implied_additive_pws;
    if (r.ap_experiment)
        j["ap_experiment"] = {{"longest", r.ap_experiment->longest},
                              {"terms", r.ap_experiment->terms},
                              {"passed", r.ap_experiment->passed}};
    return j;
}

json to_json(const PullbackComparison& c) {
    return {{"reports", json::array({to_json(c.shifted), to_json(c.multiplicative)})},
            {"additive_pws", {{"set", c.additive_pws_a}, {"shifted", c.additive_pws_shifted}}},
            {"agreement", c.agreement}};
}

json to_json(const ModelCheck& m) {
    return {{"accepted", m.accepted},
            {"reason", m.reason},
            {"violated_clause", m.violated_clause ? json(*m.violated_clause + 1) : json(nullptr)},
            {"coloring", m.coloring ? to_json(*m.coloring) : json(nullptr)}};
}

json to_json(const FiniteSetWindow& a) {
    json runs = json::array();
    for (const auto& [lo, hi] : a.runs())
        runs.push_back(json::array({lo, hi}));
    return {{"window", to_json(a.window())}, {"runs", runs}};
}

FiniteSetWindow set_from_json(const json& j) {
    try {
        const auto w = j.at("window");
        std::vector<std::pair<std::int64_t, std::int64_t>> runs;
        for (const auto& r : j.at("runs"))
            runs.emplace_back(r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>());
        return FiniteSetWindow::from_runs(Window::make(w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>()), runs);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed set JSON: ") + e.what());
    }
}

json assemble(const Manifest& m, json result) {
    result["schema"] = kSchema;
    result["manifest"] = to_json(m);
    return result;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? std::string() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void flatten(const json& v, const std::string& path, std::ostringstream& os) {
    if (v.is_object() && !v.empty()) {
        for (const auto& [k, sub] : v.items())
            flatten(sub, path.empty() ? k : path + "." + k, os);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
        for (std::size_t i = 0; i < v.size(); ++i)
            flatten(v[i], path + "." + std::to_string(i), os);
    } else {
        os << cell(path) << "," << cell(v) << "\n";
    }
}

} // namespace

std::string render_csv(const json& report) {
    std::ostringstream os;
    if (report.contains("reports")) {
        os << "report,structure,property,holds,witness,counterexample,note,interior\n";
        for (std::size_t i = 0; i < report["reports"].size(); ++i) {
            const auto& r = report["reports"][i];
            for (const char* prop : {"thick", "syndetic", "pws"}) {
                const auto& v = r[prop];
                os << i << "," << cell(r["structure"]) << "," << prop << "," << cell(v["holds"]) << ","
                   << cell(v["witness"]) << "," << cell(v["counterexample"]) << "," << cell(v["note"]) << ","
                   << cell(r["interior"]) << "\n";
            }
        }
        return os.str();
    }
    os << "path,value\n";
    flatten(report, "", os);
    return os.str();
}

} // namespace symramsey::report
