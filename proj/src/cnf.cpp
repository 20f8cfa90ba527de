#include "symramsey/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "symramsey/error.hpp"

namespace symramsey {

using i64 = std::int64_t;

CnfDocument export_cnf(const PatternSpec& pattern, int r, i64 n, const SearchOptions& options) {
    if (r < 1)
        throw ValidationError("need at least one color, got r=" + std::to_string(r));
    CnfDocument doc;
    doc.pattern = pattern.name();
    doc.n = n;
    doc.r = r;
    doc.domain = options.domain;
    const Window w = doc.window();
    doc.num_vars = static_cast<i64>(w.size()) * r;
    for (i64 i = w.lo; i <= w.hi; ++i) {
        std::vector<i64> alo;
        for (int c = 0; c < r; ++c)
            alo.push_back(doc.var(i, c));
        doc.clauses.push_back(std::move(alo));
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                doc.clauses.push_back({-doc.var(i, a), -doc.var(i, b)});
    }
    for (const auto& t : detail::domain_tuples(pattern, options.domain, n, options.max_tuple_entries))
        for (int c = 0; c < r; ++c) {
            std::vector<i64> clause;
            for (i64 i : t)
                clause.push_back(-doc.var(i, c));
            doc.clauses.push_back(std::move(clause));
        }
    return doc;
}

std::string CnfDocument::to_dimacs() const {
    std::ostringstream os;
    os << "c pattern=" << pattern << " n=" << n << " r=" << r << " map=(i-lo)*r+c+1\n";
    os << "c domain=" << to_string(domain) << " window=" << window().to_string() << "\n";
    os << "p cnf " << num_vars << " " << clauses.size() << "\n";
    for (const auto& cl : clauses) {
        for (i64 lit : cl)
            os << lit << " ";
        os << "0\n";
    }
    return os.str();
}

namespace {

std::string field(const std::string& line, const std::string& key) {
    const auto pos = line.find(" " + key + "=");
    if (pos == std::string::npos)
        return {};
    const auto start = pos + key.size() + 2;
    return line.substr(start, line.find(' ', start) - start);
}

i64 to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw ValidationError("malformed " + what + " '" + s + "'");
}

} // namespace

CnfDocument CnfDocument::parse(const std::string& text) {
    CnfDocument doc;
    std::istringstream in(text);
    std::string line;
    bool have_meta = false, have_header = false;
    i64 declared = -1;
    std::vector<i64> current;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.rfind("c ", 0) == 0) {
            if (!field(line, "pattern").empty()) {
                doc.pattern = field(line, "pattern");
                doc.n = to_int(field(line, "n"), "n");
                doc.r = static_cast<int>(to_int(field(line, "r"), "r"));
                have_meta = true;
            }
            if (!field(line, "domain").empty())
                doc.domain = parse_domain(field(line, "domain"));
            continue;
        }
        if (line.rfind("p ", 0) == 0) {
            std::istringstream h(line);
            std::string p, fmt;
            h >> p >> fmt >> doc.num_vars >> declared;
            if (fmt != "cnf" || !h)
                throw ValidationError("malformed DIMACS header '" + line + "'");
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            const i64 lit = to_int(tok, "literal");
            if (lit == 0) {
                doc.clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!have_meta)
        throw ValidationError("CNF lacks the 'c pattern=... n=... r=...' metadata line");
    if (!have_header)
        throw ValidationError("CNF lacks the 'p cnf' header");
    if (!current.empty())
        throw ValidationError("last clause is not terminated by 0");
    if (static_cast<i64>(doc.clauses.size()) != declared)
        throw ValidationError("header declares " + std::to_string(declared) + " clauses, found " +
                              std::to_string(doc.clauses.size()));
    if (doc.num_vars != static_cast<i64>(doc.window().size()) * doc.r)
        throw ValidationError("variable count does not match n, r and the domain");
    return doc;
}

std::vector<i64> parse_model(const std::string& text) {
    std::vector<i64> lits;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok == "s")
            continue;
        if (tok != "v")
            ls.seekg(0);
        while (ls >> tok) {
            const i64 lit = to_int(tok, "model literal");
            if (lit != 0)
                lits.push_back(lit);
        }
    }
    return lits;
}

namespace {

std::string describe(const CnfDocument& doc, const std::vector<i64>& clause) {
    const Window w = doc.window();
    auto integer = [&](i64 lit) { return w.lo + (std::llabs(lit) - 1) / doc.r; };
    auto color = [&](i64 lit) { return static_cast<int>((std::llabs(lit) - 1) % doc.r); };
    std::ostringstream os;
    if (!clause.empty() && clause.front() > 0) {
        os << "at-least-one clause for " << integer(clause.front());
    } else if (clause.size() == 2 && integer(clause[0]) == integer(clause[1])) {
        os << "at-most-one clause for " << integer(clause[0]) << " (colors " << color(clause[0]) << ", "
           << color(clause[1]) << ")";
    } else {
        os << "configuration {";
        for (std::size_t i = 0; i < clause.size(); ++i)
            os << (i ? "," : "") << integer(clause[i]);
        os << "} in color " << (clause.empty() ? 0 : color(clause.front()));
    }
    return os.str();
}

} // namespace

ModelCheck validate_model(const CnfDocument& doc, const std::vector<i64>& literals) {
    std::vector<i64> lits = literals;
    if (!lits.empty() && lits.back() == 0)
        lits.pop_back();
    if (static_cast<i64>(lits.size()) != doc.num_vars)
        throw ValidationError("model has " + std::to_string(lits.size()) + " literals for " +
                              std::to_string(doc.num_vars) + " variables");
    std::vector<int> value(static_cast<std::size_t>(doc.num_vars) + 1, -1);
    for (i64 lit : lits) {
        const i64 v = std::llabs(lit);
        if (lit == 0 || v > doc.num_vars)
            throw ValidationError("literal " + std::to_string(lit) + " outside 1.." + std::to_string(doc.num_vars));
        if (value[static_cast<std::size_t>(v)] != -1)
            throw ValidationError("variable " + std::to_string(v) + " assigned twice");
        value[static_cast<std::size_t>(v)] = lit > 0;
    }

    ModelCheck res;
    for (std::size_t i = 0; i < doc.clauses.size(); ++i) {
        bool sat = false;
        for (i64 lit : doc.clauses[i])
            sat = sat || (value[static_cast<std::size_t>(std::llabs(lit))] == (lit > 0));
        if (!sat) {
            res.violated_clause = i;
            res.reason = "violates clause " + std::to_string(i + 1) + ": " + describe(doc, doc.clauses[i]);
            return res;
        }
    }

    const Window w = doc.window();
    std::vector<int> colors(w.size(), -1);
    for (i64 i = w.lo; i <= w.hi; ++i)
        for (int c = 0; c < doc.r; ++c)
            if (value[static_cast<std::size_t>(doc.var(i, c))] == 1) {
                if (colors[w.index(i)] != -1) {
                    res.reason = std::to_string(i) + " carries two colors";
                    return res;
                }
                colors[w.index(i)] = c;
            }
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == -1) {
            res.reason = std::to_string(w.lo + static_cast<i64>(i)) + " carries no color";
            return res;
        }
    Coloring c(w, doc.r, colors);
    if (!verify_avoiding(PatternSpec::parse(doc.pattern), c, doc.domain)) {
        res.reason = "reconstructed coloring contains a monochromatic configuration";
        return res;
    }
    res.accepted = true;
    res.coloring = std::move(c);
    return res;
}

} // namespace symramsey
