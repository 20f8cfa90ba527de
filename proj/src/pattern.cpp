#include "symramsey/pattern.hpp"

#include <charconv>

namespace symramsey {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void bad(const std::string& name, const std::string& why) {
    throw ValidationError("bad pattern '" + name + "': " + why);
}

std::int64_t parse_int(const std::string& name, const std::string& text) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty())
        bad(name, "'" + text + "' is not an integer");
    return v;
}

unsigned parse_count(const std::string& name, const std::string& text) {
    const std::int64_t v = parse_int(name, text);
    if (v < 1 || v > 1000000)
        bad(name, "'" + text + "' is not a positive count");
    return static_cast<unsigned>(v);
}

/// "key=value" -> value, or failure.
std::string keyed(const std::string& name, const std::string& seg, const std::string& key) {
    if (seg.rfind(key + "=", 0) != 0)
        bad(name, "expected '" + key + "=...', got '" + seg + "'");
    return seg.substr(key.size() + 1);
}

StarParams parse_star(const std::string& name, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2)
        bad(name, "star parameters must be '<l>,<k>'");
    return StarParams::make(parse_int(name, parts[0]), parse_int(name, parts[1]));
}

std::string star_text(const StarParams& p) {
    return std::to_string(p.l()) + "," + std::to_string(p.k());
}

std::vector<IntPolynomial> parse_polys(const std::string& name, const std::string& text) {
    std::vector<IntPolynomial> out;
    for (const auto& piece : split(text, ','))
        out.push_back(IntPolynomial::parse(piece));
    if (out.empty())
        bad(name, "no polynomials");
    return out;
}

std::string polys_text(const std::vector<IntPolynomial>& polys) {
    std::string out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i)
            out += ",";
        out += polys[i].to_string();
    }
    return out;
}

PatternSpec parse_glue(const std::string& name, const std::vector<std::string>& seg) {
    if (seg.size() < 3)
        bad(name, "glue needs a left side and star=<l>,<k>");
    GlueEquation g;
    if (seg[1] == "mean") {
        g.lhs = GlueEquation::Lhs::mean;
        g.distinct = false;
    } else if (seg[1].rfind("poly=", 0) == 0) {
        g.lhs = GlueEquation::Lhs::poly;
        g.polys = parse_polys(name, keyed(name, seg[1], "poly"));
        if (g.polys.size() != 1)
            bad(name, "poly= takes exactly one polynomial (use system= for several)");
    } else if (seg[1].rfind("system=", 0) == 0) {
        g.lhs = GlueEquation::Lhs::system;
        g.polys = parse_polys(name, keyed(name, seg[1], "system"));
    } else {
        bad(name, "unknown glue left side '" + seg[1] + "'");
    }
    g.star = parse_star(name, keyed(name, seg[2], "star"));
    for (std::size_t i = 3; i < seg.size(); ++i) {
        if (seg[i].rfind("n=", 0) == 0)
            g.arity = parse_count(name, keyed(name, seg[i], "n"));
        else if (seg[i] == "allow-equal")
            g.distinct = false;
        else if (seg[i] == "distinct")
            g.distinct = true;
        else
            bad(name, "unknown glue option '" + seg[i] + "'");
    }
    return PatternSpec{g};
}

std::pair<AffineShift, unsigned> parse_t_d(const std::string& name, const std::vector<std::string>& seg) {
    if (seg.size() < 3)
        bad(name, "expected t=<t>:d=<d>");
    return {AffineShift{parse_int(name, keyed(name, seg[1], "t"))}, parse_count(name, keyed(name, seg[2], "d"))};
}

} // namespace

PatternSpec PatternSpec::parse(const std::string& name) {
    const auto seg = split(name, ':');
    const std::string& head = seg[0];
    PatternSpec spec;

    if (head == "ap") {
        if (seg.size() != 2)
            bad(name, "expected ap:<length>");
        spec = PatternSpec{Ap{parse_count(name, seg[1])}};
    } else if (head == "poly") {
        if (seg.size() != 2)
            bad(name, "expected poly:<P1>,<P2>,...");
        spec = PatternSpec{PolyVdw{parse_polys(name, seg[1])}};
    } else if (head == "schur") {
        if (seg.size() < 2)
            bad(name, "expected schur:add|mul|star:<l>,<k>");
        SchurTriple s;
        std::size_t next = 2;
        if (seg[1] == "add") {
            s.op = SchurOp::add;
        } else if (seg[1] == "mul") {
            s.op = SchurOp::mul;
        } else if (seg[1] == "star") {
            if (seg.size() < 3)
                bad(name, "schur:star needs <l>,<k>");
            s.op = SchurOp::star;
            s.star = parse_star(name, seg[2]);
            next = 3;
        } else {
            bad(name, "unknown schur operation '" + seg[1] + "'");
        }
        for (; next < seg.size(); ++next) {
            if (seg[next] == "distinct")
                s.allow_equal = false;
            else if (seg[next] == "allow-equal")
                s.allow_equal = true;
            else
                bad(name, "unknown schur option '" + seg[next] + "'");
        }
        spec = PatternSpec{s};
    } else if (head == "moreira" && seg.size() == 1) {
        spec = PatternSpec{MoreiraTriple{}};
    } else if (head == "blm" && seg.size() == 1) {
        spec = PatternSpec{BlmTriple{}};
    } else if (head == "sigma") {
        if (seg.size() != 3)
            bad(name, "expected sigma:t=<t>:d=<d>");
        auto [t, d] = parse_t_d(name, seg);
        spec = PatternSpec{SigmaConfig{t, d}};
    } else if (head == "glue") {
        spec = parse_glue(name, seg);
    } else if (head == "mixed") {
        auto [t, d] = parse_t_d(name, seg);
        if (seg.size() < 4)
            bad(name, "mixed needs a family name");
        std::string rest;
        for (std::size_t i = 3; i < seg.size(); ++i)
            rest += (i > 3 ? ":" : "") + seg[i];
        auto family = std::make_shared<const PatternSpec>(PatternSpec::parse(rest));
        spec = PatternSpec{MixedConfig{family, t, d}};
    } else if (head == "quad") {
        if (seg.size() != 3)
            bad(name, "expected quad:t=<t>:d=<d>");
        auto [t, d] = parse_t_d(name, seg);
        spec = PatternSpec{QuadSequences{t, d}};
    } else {
        bad(name, "unknown pattern family '" + head + "'");
    }
    spec.validate();
    return spec;
}

std::string PatternSpec::name() const {
    struct Namer {
        std::string operator()(const Ap& p) const { return "ap:" + std::to_string(p.length); }
        std::string operator()(const PolyVdw& p) const { return "poly:" + polys_text(p.polys); }
        std::string operator()(const SchurTriple& s) const {
            std::string out = "schur:";
            switch (s.op) {
            case SchurOp::add: out += "add"; break;
            case SchurOp::mul: out += "mul"; break;
            case SchurOp::star: out += "star:" + star_text(*s.star); break;
            }
            if (!s.allow_equal)
                out += ":distinct";
            return out;
        }
        std::string operator()(const MoreiraTriple&) const { return "moreira"; }
        std::string operator()(const BlmTriple&) const { return "blm"; }
        std::string operator()(const SigmaConfig& s) const {
            return "sigma:t=" + std::to_string(s.t.t) + ":d=" + std::to_string(s.depth);
        }
        std::string operator()(const GlueEquation& g) const {
            std::string out = "glue:";
            bool default_distinct = true;
            switch (g.lhs) {
            case GlueEquation::Lhs::poly: out += "poly=" + polys_text(g.polys); break;
            case GlueEquation::Lhs::mean:
                out += "mean";
                default_distinct = false;
                break;
            case GlueEquation::Lhs::system: out += "system=" + polys_text(g.polys); break;
            }
            out += ":star=" + star_text(g.star);
            if (g.arity != 2)
                out += ":n=" + std::to_string(g.arity);
            if (g.distinct != default_distinct)
                out += g.distinct ? ":distinct" : ":allow-equal";
            return out;
        }
        std::string operator()(const MixedConfig& m) const {
            return "mixed:t=" + std::to_string(m.t.t) + ":d=" + std::to_string(m.depth) + ":" + m.family->name();
        }
        std::string operator()(const QuadSequences& q) const {
            return "quad:t=" + std::to_string(q.t.t) + ":d=" + std::to_string(q.depth);
        }
    };
    return std::visit(Namer{}, kind);
}

void PatternSpec::validate() const {
    struct Validator {
        void operator()(const Ap& p) const {
            if (p.length < 1)
                throw ValidationError("ap length must be at least 1");
        }
        void operator()(const PolyVdw& p) const {
            if (p.polys.empty())
                throw ValidationError("poly pattern needs at least one polynomial");
            for (const auto& q : p.polys)
                if (!q.zero_constant())
                    throw ValidationError("polynomial " + q.to_string() + " has a constant term");
        }
        void operator()(const SchurTriple& s) const {
            if ((s.op == SchurOp::star) != s.star.has_value())
                throw ValidationError("schur star parameters present iff op is star");
        }
        void operator()(const MoreiraTriple&) const {}
        void operator()(const BlmTriple&) const {}
        void operator()(const SigmaConfig& s) const {
            if (s.depth < 1)
                throw ValidationError("sigma depth must be at least 1");
        }
        void operator()(const GlueEquation& g) const {
            if (!g.star.has_identity())
                throw ValidationError("glue equations require l | (k-1); got l=" + std::to_string(g.star.l()) +
                                      ", k=" + std::to_string(g.star.k()));
            if (g.arity < 1)
                throw ValidationError("glue right-hand side needs at least one variable");
            const std::size_t want = g.lhs == GlueEquation::Lhs::mean ? 0 : 1;
            if (g.lhs == GlueEquation::Lhs::system ? g.polys.empty() : g.polys.size() != want)
                throw ValidationError("wrong number of polynomials for glue left side");
            for (const auto& q : g.polys)
                if (!q.zero_constant())
                    throw ValidationError("polynomial " + q.to_string() + " has a constant term");
        }
        void operator()(const MixedConfig& m) const {
            if (!m.family)
                throw ValidationError("mixed configuration without a family");
            if (m.depth < 1 || m.depth > 2)
                throw ValidationError("mixed configuration depth must be 1 or 2");
            if (!m.family->is_tuple_family())
                throw ValidationError("mixed family must be a plain configuration family");
            m.family->validate();
        }
        void operator()(const QuadSequences& q) const {
            if (q.depth < 1 || q.depth > 2)
                throw ValidationError("quad sequence depth must be 1 or 2");
        }
    };
    std::visit(Validator{}, kind);
}

bool PatternSpec::is_tuple_family() const {
    return !is<MixedConfig>() && !is<QuadSequences>();
}

bool operator==(const PatternSpec& a, const PatternSpec& b) {
    return a.name() == b.name();
}

} // namespace symramsey
