#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "symramsey/error.hpp"

namespace symramsey::cli {

using report::json;
using i64 = std::int64_t;

namespace {

/// TOML config, or JSON when the file starts with '{'. Both map nested
/// tables/objects onto subcommands, e.g. [pr.decide] or {"pr": {"decide": {}}}.
class TomlOrJsonConfig : public CLI::ConfigTOML {
  public:
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        const std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || text[first] != '{') {
            std::istringstream in(text);
            return CLI::ConfigTOML::from_config(in);
        }
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
        }
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

  private:
    static std::string scalar(const json& v) {
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    }

    static void collect(const json& obj, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
        for (const auto& [key, v] : obj.items()) {
            if (v.is_object()) {
                auto p = parents;
                p.push_back(key);
                collect(v, p, out);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (v.is_array())
                for (const auto& e : v)
                    item.inputs.push_back(scalar(e));
            else
                item.inputs.push_back(scalar(v));
            out.push_back(std::move(item));
        }
    }
};

struct Globals {
    std::string format = "json";
    std::string output;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    bool timing = false;
};

struct Outcome {
    int code = 0;
    json result;
};

Window parse_window(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ValidationError("window must be written lo,hi; got '" + text + "'");
    try {
        return Window::make(std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)));
    } catch (const std::logic_error&) {
        throw ValidationError("window must be written lo,hi; got '" + text + "'");
    }
}

i64 parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::logic_error&) {
    }
    throw ValidationError("'" + s + "' is not an integer");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

/// "10..40,60..90,95"
FiniteSetWindow parse_set(Window w, const std::string& text) {
    std::vector<std::pair<i64, i64>> runs;
    for (const auto& item : split(text, ',')) {
        if (item.empty())
            continue;
        const auto dots = item.find("..");
        if (dots == std::string::npos)
            runs.emplace_back(parse_int(item), parse_int(item));
        else
            runs.emplace_back(parse_int(item.substr(0, dots)), parse_int(item.substr(dots + 2)));
    }
    return FiniteSetWindow::from_runs(w, runs);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

/// Draws uniformly from [-range, range] with a fixed mapping, so samples are
/// identical across standard libraries.
struct Sampler {
    std::mt19937_64 rng;
    i64 range;
    i64 operator()() { return static_cast<i64>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range; }
};

json effective_params(const CLI::App* leaf) {
    json params = json::object();
    for (const CLI::Option* opt : leaf->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help")
            continue;
        const auto& res = opt->results();
        if (res.size() == 1)
            params[name] = res.front();
        else if (!res.empty())
            params[name] = res;
        else if (!opt->get_default_str().empty())
            params[name] = opt->get_default_str();
        else
            params[name] = nullptr;
    }
    return params;
}

// ---------------------------------------------------------------- algebra

struct AlgebraVerify {
    i64 l = 1, k = 1;
    std::optional<i64> t;
    std::size_t samples = 100000;
    i64 range = 1000000;
    std::size_t max_n = 8;
};

struct CheckTally {
    std::size_t tested = 0;
    std::size_t failures = 0;
    json counterexample = nullptr;

    void record(bool ok, const std::vector<std::string>& values) {
        ++tested;
        if (!ok && failures++ == 0)
            counterexample = values;
    }
    json to_json() const { return {{"tested", tested}, {"failures", failures}, {"counterexample", counterexample}}; }
};

Outcome algebra_verify(const AlgebraVerify& o, const Globals& g) {
    const StarParams sp = o.t ? AffineShift{*o.t}.as_star() : StarParams::make(o.l, o.k);
    if (o.range < 1)
        throw ValidationError("--range must be positive");
    Sampler draw{std::mt19937_64(g.seed), o.range};
    auto s = [](Int128 v) { return to_string(v); };
    const Int128 l = sp.l(), k = sp.k();

    CheckTally product, commutative, associative, identity, fold, iso;
    for (std::size_t i = 0; i < o.samples; ++i) {
        const Int128 a = draw(), b = draw(), c = draw();
        const Int128 ab = star<Int128>(sp, a, b);
        product.record(arith::add(arith::mul(l, ab), k) == arith::mul(arith::add(arith::mul(l, a), k),
                                                                           arith::add(arith::mul(l, b), k)),
                       {s(a), s(b)});
        commutative.record(ab == star<Int128>(sp, b, a), {s(a), s(b)});
        associative.record(star<Int128>(sp, ab, c) == star<Int128>(sp, a, star<Int128>(sp, b, c)),
                           {s(a), s(b), s(c)});
        if (const auto e = sp.identity())
            identity.record(star<Int128>(sp, Int128(*e), a) == a && star<Int128>(sp, a, Int128(*e)) == a, {s(a)});
        if (o.t) {
            const AffineShift sh{*o.t};
            iso.record(h_iso<Int128>(sh, a + b) == oplus<Int128>(sh, h_iso<Int128>(sh, a), h_iso<Int128>(sh, b)) &&
                           h_iso<Int128>(sh, a * b) == odot<Int128>(sh, h_iso<Int128>(sh, a), h_iso<Int128>(sh, b)),
                       {s(a), s(b)});
        }
    }
    const std::size_t per_n = std::max<std::size_t>(1, o.samples / 100);
    for (std::size_t n = 1; n <= o.max_n; ++n)
        for (std::size_t i = 0; i < per_n; ++i) {
            std::vector<BigInt> xs;
            std::vector<std::string> shown;
            for (std::size_t j = 0; j < n; ++j) {
                xs.emplace_back(draw());
                shown.push_back(xs.back().str());
            }
            fold.record(gsym<BigInt>(sp, xs) == star_fold<BigInt>(sp, xs), shown);
        }

    json checks = {{"product", product.to_json()},
                   {"commutative", commutative.to_json()},
                   {"associative", associative.to_json()},
                   {"gsym_equals_fold", fold.to_json()}};
    if (sp.identity())
        checks["identity"] = identity.to_json();
    if (o.t)
        checks["ring_isomorphism"] = iso.to_json();
    bool passed = true;
    for (const auto& [name, c] : checks.items())
        passed = passed && c["failures"] == 0;
    json result = {{"l", sp.l()}, {"k", sp.k()}, {"identity", sp.identity() ? json(*sp.identity()) : json(nullptr)},
                   {"checks", checks}, {"passed", passed}};
    return {passed ? 0 : 1, result};
}

struct AlgebraEval {
    std::string op;
    std::vector<std::string> values;
    i64 l = 1, k = 1, t = 0;
    std::size_t j = 1;
};

Outcome algebra_eval(const AlgebraEval& o) {
    std::vector<BigInt> xs;
    for (const auto& v : o.values) {
        try {
            xs.emplace_back(v);
        } catch (const std::exception&) {
            throw ValidationError("'" + v + "' is not an integer");
        }
    }
    auto need = [&](std::size_t n) {
        if (xs.size() != n)
            throw ValidationError(o.op + " takes " + std::to_string(n) + " value(s), got " + std::to_string(xs.size()));
    };
    const AffineShift sh{o.t};
    BigInt value;
    if (o.op == "star") {
        need(2);
        value = star<BigInt>(StarParams::make(o.l, o.k), xs[0], xs[1]);
    } else if (o.op == "fold") {
        value = star_fold<BigInt>(StarParams::make(o.l, o.k), xs);
    } else if (o.op == "gsym") {
        value = gsym<BigInt>(StarParams::make(o.l, o.k), xs);
    } else if (o.op == "elem") {
        value = elem_sym<BigInt>(o.j, xs);
    } else if (o.op == "oplus") {
        need(2);
        value = oplus<BigInt>(sh, xs[0], xs[1]);
    } else if (o.op == "odot") {
        need(2);
        value = odot<BigInt>(sh, xs[0], xs[1]);
    } else if (o.op == "h") {
        need(1);
        value = h_iso<BigInt>(sh, xs[0]);
    } else {
        need(1);
        value = h_iso<BigInt>(sh, xs[0], Direction::inverse);
    }
    return {0, {{"op", o.op}, {"values", o.values}, {"value", value.str()}}};
}

// ---------------------------------------------------------------- patterns

struct PatternArgs {
    std::string pattern;
    std::string window;
    std::optional<i64> n;
    std::string coloring;
    std::string classes;
    std::optional<int> colors;
    std::size_t limit = 1000;
};

Window pattern_window(const PatternArgs& o) {
    if (!o.window.empty())
        return parse_window(o.window);
    if (o.n)
        return Window::positive(*o.n);
    throw ValidationError("give --window lo,hi or --n N");
}

Coloring pattern_coloring(const PatternArgs& o, Window w) {
    if (!o.classes.empty()) {
        std::vector<std::vector<i64>> classes;
        for (const auto& cls : split(o.classes, '|')) {
            classes.emplace_back();
            for (const auto& v : split(cls, ','))
                if (!v.empty())
                    classes.back().push_back(parse_int(v));
        }
        auto c = Coloring::from_classes(w, classes);
        return o.colors ? Coloring(w, *o.colors, c.table()) : c;
    }
    if (!o.coloring.empty()) {
        std::vector<int> table;
        int top = 0;
        for (const auto& v : split(o.coloring, ',')) {
            table.push_back(static_cast<int>(parse_int(v)));
            top = std::max(top, table.back());
        }
        return Coloring(w, o.colors.value_or(top + 1), table);
    }
    throw ValidationError("give the coloring with --coloring c1,c2,... or --classes a,b|c,d");
}

Outcome patterns_find(const PatternArgs& o) {
    const auto p = PatternSpec::parse(o.pattern);
    const Window w = pattern_window(o);
    const auto c = pattern_coloring(o, w);
    const auto wit = find_monochromatic(c, p);
    json result = {{"pattern", p.name()},
                   {"window", report::to_json(w)},
                   {"coloring", report::to_json(c)},
                   {"found", wit.has_value()},
                   {"witness", wit ? report::to_json(*wit) : json(nullptr)}};
    return {wit ? 0 : 1, result};
}

Outcome patterns_enumerate(const PatternArgs& o) {
    const auto p = PatternSpec::parse(o.pattern);
    const Window w = pattern_window(o);
    auto sols = enumerate_solutions(p, w, o.limit == SIZE_MAX ? o.limit : o.limit + 1);
    const bool truncated = sols.size() > o.limit;
    if (truncated)
        sols.resize(o.limit);
    json list = json::array();
    for (const auto& s : sols)
        list.push_back(report::to_json(s));
    return {0,
            {{"pattern", p.name()},
             {"window", report::to_json(w)},
             {"count", sols.size()},
             {"truncated", truncated},
             {"solutions", list}}};
}

// ---------------------------------------------------------------- largeness

struct LargenessArgs {
    std::string structure = "additive";
    std::string window;
    std::string set;
    std::string set_file;
    std::optional<double> random;
    i64 gap = 1, run = 1, m = 1;
    i64 l = 1, k = 1;
    std::optional<i64> t;
};

FiniteSetWindow largeness_set(const LargenessArgs& o, const Globals& g) {
    const int sources = !o.set.empty() + !o.set_file.empty() + o.random.has_value();
    if (sources != 1)
        throw ValidationError("give exactly one of --set, --set-file, --random");
    if (!o.set_file.empty()) {
        json j;
        try {
            j = json::parse(read_file(o.set_file));
        } catch (const json::parse_error& e) {
            throw ValidationError(o.set_file + " is not valid JSON: " + e.what());
        }
        return report::set_from_json(j);
    }
    if (o.window.empty())
        throw ValidationError("--window lo,hi is required with --set and --random");
    const Window w = parse_window(o.window);
    if (!o.set.empty())
        return parse_set(w, o.set);
    if (*o.random < 0 || *o.random > 1)
        throw ValidationError("--random density must lie in [0,1]");
    std::mt19937_64 rng(g.seed);
    FiniteSetWindow a(w);
    const auto cut = static_cast<std::uint64_t>(*o.random * 18446744073709551615.0);
    for (i64 v = w.lo; v <= w.hi; ++v)
        a.set(v, *o.random >= 1 || rng() < cut);
    return a;
}

Outcome largeness_analyze(const LargenessArgs& o, const Globals& g) {
    const auto a = largeness_set(o, g);
    const LargenessParams p{o.gap, o.run, o.m};
    LargenessReport rep;
    if (o.structure == "additive")
        rep = analyze_additive(a, p);
    else if (o.structure == "multiplicative")
        rep = analyze_multiplicative(a, p);
    else
        rep = analyze_star(a, o.t ? AffineShift{*o.t}.as_star() : StarParams::make(o.l, o.k), p);
    return {0, {{"set", report::to_json(a)}, {"reports", json::array({report::to_json(rep)})}}};
}

Outcome largeness_compare(const LargenessArgs& o, const Globals& g) {
    const auto a = largeness_set(o, g);
    const auto cmp = pullback_compare(a, AffineShift{o.t.value_or(0)}, LargenessParams{o.gap, o.run, o.m});
    json result = report::to_json(cmp);
    result["set"] = report::to_json(a);
    result["t"] = o.t.value_or(0);
    return {cmp.agreement ? 0 : 1, result};
}

// ---------------------------------------------------------------- pr

struct PrArgs {
    std::string pattern;
    int colors = 2;
    std::optional<i64> n;
    i64 max = 0;
    std::string domain = "positive";
    bool brute = false;
    std::string cnf;
    std::string model;
};

SearchOptions search_options(const PrArgs& o, const Globals& g) {
    SearchOptions opt;
    opt.domain = parse_domain(o.domain);
    opt.workers = g.workers;
    return opt;
}

i64 required_n(const PrArgs& o) {
    if (!o.n)
        throw ValidationError("--n is required");
    return *o.n;
}

Outcome pr_decide(const PrArgs& o, const Globals& g) {
    const auto p = PatternSpec::parse(o.pattern);
    const auto opt = search_options(o, g);
    const auto out = o.brute ? brute_force_decide(p, o.colors, required_n(o), opt.domain)
                             : decide(p, o.colors, required_n(o), opt);
    json result = report::to_json(out, g.timing);
    result["method"] = o.brute ? "brute-force" : "backtracking";
    result["verified"] = out.coloring ? json(verify_avoiding(p, *out.coloring, opt.domain)) : json(nullptr);
    return {out.avoidable ? 1 : 0, result};
}

Outcome pr_rado(const PrArgs& o, const Globals& g) {
    const auto p = PatternSpec::parse(o.pattern);
    const auto opt = search_options(o, g);
    const auto res = rado_number(p, o.colors, o.max, opt);
    json result = report::to_json(res, g.timing);
    result["certificate_verified"] =
        res.certificate ? json(verify_avoiding(p, *res.certificate, opt.domain)) : json(nullptr);
    return {res.number ? 0 : 1, result};
}

Outcome pr_export(const PrArgs& o, const Globals& g) {
    const auto p = PatternSpec::parse(o.pattern);
    const auto doc = export_cnf(p, o.colors, required_n(o), search_options(o, g));
    std::ofstream f(o.cnf, std::ios::binary);
    if (!(f << doc.to_dimacs()))
        throw ResourceError("cannot write " + o.cnf);
    return {0,
            {{"pattern", doc.pattern},
             {"r", doc.r},
             {"n", doc.n},
             {"domain", to_string(doc.domain)},
             {"variables", doc.num_vars},
             {"clauses", doc.clauses.size()},
             {"cnf", o.cnf}}};
}

Outcome pr_check(const PrArgs& o) {
    const auto doc = CnfDocument::parse(read_file(o.cnf));
    const auto check = validate_model(doc, parse_model(read_file(o.model)));
    json result = report::to_json(check);
    result["pattern"] = doc.pattern;
    result["r"] = doc.r;
    result["n"] = doc.n;
    result["domain"] = to_string(doc.domain);
    return {check.accepted ? 0 : 1, result};
}

void add_domain(CLI::App* sub, PrArgs& o) {
    sub->add_option("--domain", o.domain, "positive: [1,N]; z: [-N,N] without configurations through 0")
        ->check(CLI::IsMember({"positive", "z"}))
        ->capture_default_str();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric-operation Ramsey toolkit: algebra, patterns, largeness and avoidability search",
                 "symramsey"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", SYMRAMSEY_VERSION);
    app.config_formatter(std::make_shared<TomlOrJsonConfig>());
    app.set_config("--config", "", "TOML or JSON file; flags override it");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Globals g;
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--output", g.output, "write the report here instead of stdout");
    app.add_option("--workers", g.workers, "search threads")
        ->envname("SYMRAMSEY_WORKERS")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for sampled checks and random sets")->capture_default_str();
    app.add_flag("--timing", g.timing, "record wall times (reports stop being byte-reproducible)");

    std::function<Outcome()> handler;
    std::string command;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
        sub->callback([&handler, &command, name = std::move(name), fn = std::move(fn)] {
            command = name;
            handler = fn;
        });
    };

    // algebra
    auto* algebra = app.add_subcommand("algebra", "exact (l,k)-operation identities");
    algebra->require_subcommand(1);
    AlgebraVerify av;
    auto* verify = algebra->add_subcommand("verify", "sampled identity suite");
    verify->add_option("--l", av.l)->capture_default_str();
    verify->add_option("--k", av.k)->capture_default_str();
    verify->add_option("--t", av.t, "use (.)_t = (1,-t) and also check the ring isomorphism");
    verify->add_option("--samples", av.samples)->capture_default_str();
    verify->add_option("--range", av.range, "samples lie in [-range, range]")->capture_default_str();
    verify->add_option("--max-n", av.max_n, "gsym = fold up to this arity")->capture_default_str();
    bind(verify, "algebra verify", [&] { return algebra_verify(av, g); });

    AlgebraEval ae;
    auto* eval = algebra->add_subcommand("eval", "evaluate one operation exactly");
    eval->add_option("--op", ae.op)
        ->required()
        ->check(CLI::IsMember({"star", "fold", "gsym", "elem", "oplus", "odot", "h", "h-inverse"}));
    eval->add_option("--values", ae.values)->required()->delimiter(',');
    eval->add_option("--l", ae.l)->capture_default_str();
    eval->add_option("--k", ae.k)->capture_default_str();
    eval->add_option("--t", ae.t)->capture_default_str();
    eval->add_option("--j", ae.j, "degree for elem")->capture_default_str();
    bind(eval, "algebra eval", [&] { return algebra_eval(ae); });

    // patterns
    auto* patterns = app.add_subcommand("patterns", "configuration catalog");
    patterns->require_subcommand(1);
    PatternArgs pa;
    auto pattern_opts = [&](CLI::App* sub) {
        sub->add_option("--pattern", pa.pattern, "canonical pattern name, e.g. ap:3")->required();
        sub->add_option("--window", pa.window, "lo,hi");
        sub->add_option("--n", pa.n, "window [1,N]");
    };
    auto* find = patterns->add_subcommand("find", "least monochromatic configuration of a coloring");
    pattern_opts(find);
    find->add_option("--coloring", pa.coloring, "colors of lo..hi, comma separated");
    find->add_option("--classes", pa.classes, "color classes, e.g. 1,4|2,3");
    find->add_option("--colors", pa.colors, "number of colors r");
    bind(find, "patterns find", [&] { return patterns_find(pa); });
    auto* enumerate = patterns->add_subcommand("enumerate", "configurations inside a window, in order");
    pattern_opts(enumerate);
    enumerate->add_option("--limit", pa.limit)->capture_default_str();
    bind(enumerate, "patterns enumerate", [&] { return patterns_enumerate(pa); });

    // largeness
    auto* largeness = app.add_subcommand("largeness", "finite thick/syndetic/pws detectors");
    largeness->require_subcommand(1);
    LargenessArgs la;
    auto set_opts = [&](CLI::App* sub) {
        sub->add_option("--window", la.window, "lo,hi");
        sub->add_option("--set", la.set, "members, e.g. 10..40,60..90");
        sub->add_option("--set-file", la.set_file, "JSON {window, runs}");
        sub->add_option("--random", la.random, "seeded random set of this density");
        sub->add_option("--gap", la.gap, "syndetic gap g")->capture_default_str();
        sub->add_option("--run", la.run, "run length L")->capture_default_str();
        sub->add_option("--m", la.m, "translate bound m")->capture_default_str();
    };
    auto* analyze = largeness->add_subcommand("analyze", "verdicts for one structure");
    set_opts(analyze);
    analyze->add_option("--structure", la.structure)
        ->check(CLI::IsMember({"additive", "multiplicative", "star"}))
        ->capture_default_str();
    analyze->add_option("--l", la.l)->capture_default_str();
    analyze->add_option("--k", la.k)->capture_default_str();
    analyze->add_option("--t", la.t, "star structure (.)_t instead of --l/--k");
    bind(analyze, "largeness analyze", [&] { return largeness_analyze(la, g); });
    auto* compare = largeness->add_subcommand("compare", "multiplicative verdicts on A vs (.)_t verdicts on A+t");
    set_opts(compare);
    compare->add_option("--t", la.t)->default_str("0");
    bind(compare, "largeness compare", [&] { return largeness_compare(la, g); });

    // pr
    auto* pr = app.add_subcommand("pr", "avoidability search, Rado numbers, CNF");
    pr->require_subcommand(1);
    PrArgs pr_args;
    auto* pr_dec = pr->add_subcommand("decide", "is every r-coloring forced? exit 0 yes, 1 avoidable");
    pr_dec->add_option("--pattern", pr_args.pattern)->required();
    pr_dec->add_option("--colors", pr_args.colors)->capture_default_str();
    pr_dec->add_option("--n", pr_args.n)->required();
    add_domain(pr_dec, pr_args);
    pr_dec->add_flag("--brute-force", pr_args.brute, "scan every coloring instead of backtracking");
    bind(pr_dec, "pr decide", [&] { return pr_decide(pr_args, g); });
    auto* rado = pr->add_subcommand("rado", "least forcing N up to --max");
    rado->add_option("--pattern", pr_args.pattern)->required();
    rado->add_option("--colors", pr_args.colors)->capture_default_str();
    rado->add_option("--max", pr_args.max)->required();
    add_domain(rado, pr_args);
    bind(rado, "pr rado", [&] { return pr_rado(pr_args, g); });
    auto* exp = pr->add_subcommand("export-cnf", "DIMACS CNF, satisfiable iff avoidable");
    exp->add_option("--pattern", pr_args.pattern)->required();
    exp->add_option("--colors", pr_args.colors)->capture_default_str();
    exp->add_option("--n", pr_args.n)->required();
    add_domain(exp, pr_args);
    exp->add_option("--cnf", pr_args.cnf, "output path")->required();
    bind(exp, "pr export-cnf", [&] { return pr_export(pr_args, g); });
    auto* check = pr->add_subcommand("check-model", "validate a solver model against an exported CNF");
    check->add_option("--cnf", pr_args.cnf)->required();
    check->add_option("--model", pr_args.model, "DIMACS v-line model")->required();
    bind(check, "pr check-model", [&] { return pr_check(pr_args); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    // the invoked leaf subcommand
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty())
        leaf = leaf->get_subcommands().front();

    try {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome res = handler();
        report::Manifest m;
        m.command = command;
        m.params = effective_params(leaf);
        m.seed = g.seed;
        m.version = SYMRAMSEY_VERSION;
        m.workers = g.workers;
        if (g.timing)
            m.wall_time_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const json rep = report::assemble(m, std::move(res.result));
        const std::string text = g.format == "csv" ? report::render_csv(rep) : report::render_json(rep);
        if (g.output.empty()) {
            out << text;
        } else {
            std::ofstream f(g.output, std::ios::binary);
            if (!(f << text)) {
                err << "error: cannot write " << g.output << "\n";
                return 2;
            }
        }
        return res.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace symramsey::cli
