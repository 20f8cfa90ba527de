// Independent re-check of solution tuples. Everything is recomputed from the
// assignment in arbitrary precision; no enumeration or factoring helpers are used.

#include "symramsey/solutions.hpp"

#include <algorithm>
#include <map>

namespace symramsey {

namespace {

using Vars = std::map<std::string, BigInt>;

struct Checker {
    Window window;
    const Vars& vars;
    std::string failure;

    BigInt get(const std::string& name) {
        auto it = vars.find(name);
        if (it == vars.end()) {
            fail("missing variable " + name);
            return 0;
        }
        return it->second;
    }
    bool fail(const std::string& why) {
        if (failure.empty())
            failure = why;
        return false;
    }
    bool in_window(const BigInt& v) { return v >= window.lo && v <= window.hi; }
};

std::vector<BigInt> sorted_unique(std::vector<BigInt> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

BigInt eval_poly(const IntPolynomial& p, const BigInt& d) {
    BigInt acc = p.constant;
    BigInt power = 1;
    for (std::int64_t c : p.coeffs) {
        power *= d;
        acc += BigInt(c) * power;
    }
    return acc;
}

/// l*c + k == prod(l*y + k), i.e. c is the fold of ys.
bool is_star_fold(const StarParams& sp, const BigInt& c, const std::vector<BigInt>& ys) {
    BigInt prod = 1;
    for (const auto& y : ys)
        prod *= BigInt(sp.l()) * y + sp.k();
    return BigInt(sp.l()) * c + sp.k() == prod;
}

BigInt odot_big(std::int64_t t, const BigInt& a, const BigInt& b) {
    return (a - t) * (b - t) + t;
}

/// Expected occupied set for the pattern, or failure recorded in ck.
std::vector<BigInt> expected_occupied(const PatternSpec& pattern, Checker& ck);

std::vector<BigInt> check_family_member(const PatternSpec& family, const std::string& prefix, Checker& ck) {
    Vars sub;
    for (const auto& [name, v] : ck.vars)
        if (name.rfind(prefix, 0) == 0)
            sub[name.substr(prefix.size())] = v;
    Checker inner{ck.window, sub, {}};
    auto occ = expected_occupied(family, inner);
    if (!inner.failure.empty())
        ck.fail(prefix + inner.failure);
    return occ;
}

std::vector<BigInt> expected_occupied(const PatternSpec& pattern, Checker& ck) {
    std::vector<BigInt> occ;
    if (pattern.is<Ap>()) {
        const auto L = pattern.as<Ap>().length;
        const BigInt a = ck.get("a"), d = ck.get("d");
        if (d < 1)
            ck.fail("common difference must be positive");
        if (L == 1 && d != 1)
            ck.fail("length-1 progressions are written with d = 1");
        for (unsigned i = 0; i < L; ++i)
            occ.push_back(a + d * i);
    } else if (pattern.is<PolyVdw>()) {
        const BigInt a = ck.get("a"), d = ck.get("d");
        if (d < 1)
            ck.fail("d must be positive");
        occ.push_back(a);
        for (const auto& p : pattern.as<PolyVdw>().polys)
            occ.push_back(a + eval_poly(p, d));
    } else if (pattern.is<SchurTriple>()) {
        const auto& s = pattern.as<SchurTriple>();
        const BigInt x = ck.get("x"), y = ck.get("y"), z = ck.get("z");
        BigInt expect;
        switch (s.op) {
        case SchurOp::add: expect = x + y; break;
        case SchurOp::mul: expect = x * y; break;
        case SchurOp::star: {
            const BigInt l = s.star->l(), k = s.star->k();
            // l z + k == (l x + k)(l y + k)
            if (l * z + k != (l * x + k) * (l * y + k))
                ck.fail("z is not x (*) y");
            expect = z;
            break;
        }
        }
        if (z != expect)
            ck.fail("z does not equal x o y");
        if (!s.allow_equal && x == y)
            ck.fail("x == y although distinct");
        occ = {x, y, z};
    } else if (pattern.is<MoreiraTriple>() || pattern.is<BlmTriple>()) {
        const BigInt x = ck.get("x"), y = ck.get("y");
        if (!ck.in_window(y))
            ck.fail("y outside window");
        const BigInt mid = pattern.is<BlmTriple>() ? BigInt(x + y + x * y) : BigInt(x + y);
        occ = {x, mid, BigInt(x * y)};
    } else if (pattern.is<SigmaConfig>()) {
        const auto& s = pattern.as<SigmaConfig>();
        std::vector<BigInt> xs;
        for (unsigned i = 1; i <= s.depth; ++i)
            xs.push_back(ck.get("x" + std::to_string(i)));
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i - 1] < xs[i]))
                ck.fail("sequence not strictly increasing");
        // closed form prod (x_i - t) + t over nonempty subsets
        for (std::size_t mask = 1; mask < (std::size_t{1} << xs.size()); ++mask) {
            BigInt prod = 1;
            for (std::size_t i = 0; i < xs.size(); ++i)
                if (mask >> i & 1)
                    prod *= xs[i] - s.t.t;
            occ.push_back(prod + s.t.t);
        }
    } else if (pattern.is<GlueEquation>()) {
        const auto& g = pattern.as<GlueEquation>();
        std::vector<std::string> rhs;
        if (g.lhs == GlueEquation::Lhs::system) {
            for (unsigned i = 1; i <= g.arity; ++i)
                rhs.push_back("y" + std::to_string(i));
        } else {
            const std::string base = g.lhs == GlueEquation::Lhs::poly ? "z" : "c";
            if (g.arity == 2)
                rhs = g.lhs == GlueEquation::Lhs::poly ? std::vector<std::string>{"z", "w"}
                                                       : std::vector<std::string>{"c", "d"};
            else
                for (unsigned i = 1; i <= g.arity; ++i)
                    rhs.push_back(base + std::to_string(i));
        }
        std::vector<BigInt> ys;
        for (const auto& n : rhs)
            ys.push_back(ck.get(n));
        occ = ys;

        if (g.lhs == GlueEquation::Lhs::mean) {
            const BigInt a = ck.get("a"), b = ck.get("b");
            if (g.distinct && a == b)
                ck.fail("a == b although distinct");
            // (a + b)/2 == c, i.e. l(a+b) + 2k == 2 prod(l y + k)
            BigInt prod = 1;
            for (const auto& y : ys)
                prod *= BigInt(g.star.l()) * y + g.star.k();
            if (BigInt(g.star.l()) * (a + b) + 2 * BigInt(g.star.k()) != 2 * prod)
                ck.fail("(a+b)/2 != fold of right-hand side");
            occ.push_back(a);
            occ.push_back(b);
        } else {
            const BigInt x = ck.get("x"), y = ck.get("y");
            if (g.distinct && x == y)
                ck.fail("x == y although distinct");
            occ.push_back(x);
            occ.push_back(y);
            if (g.lhs == GlueEquation::Lhs::poly) {
                if (!is_star_fold(g.star, x + eval_poly(g.polys[0], y - x), ys))
                    ck.fail("x + P(y-x) != fold of right-hand side");
            } else {
                for (std::size_t i = 0; i < g.polys.size(); ++i) {
                    const BigInt xi = ck.get("x" + std::to_string(i + 1));
                    occ.push_back(xi);
                    if (!is_star_fold(g.star, xi - eval_poly(g.polys[i], y - x), ys))
                        ck.fail("equation " + std::to_string(i + 1) + " of the system fails");
                }
            }
        }
    } else if (pattern.is<MixedConfig>()) {
        const auto& m = pattern.as<MixedConfig>();
        const std::int64_t t = m.t.t;
        std::vector<std::vector<BigInt>> fam;
        std::vector<BigInt> xs;
        for (unsigned i = 1; i <= m.depth; ++i) {
            fam.push_back(sorted_unique(check_family_member(*m.family, "F" + std::to_string(i) + ".", ck)));
            xs.push_back(ck.get("x" + std::to_string(i)));
            if (xs.back() == t || xs.back() == t + 1)
                ck.fail("x equals t or t+1");
            if (std::find(fam.back().begin(), fam.back().end(), BigInt(t)) != fam.back().end())
                ck.fail("family member contains t");
        }
        if (xs.size() == 2 && !(xs[0] < xs[1]))
            ck.fail("x sequence not strictly increasing");
        // sigma_t over index subsets of the three sequences
        std::vector<std::vector<BigInt>> scaled(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            occ.push_back(xs[i]);
            for (const auto& f : fam[i]) {
                occ.push_back(f);
                scaled[i].push_back((f - t) * (xs[i] - t) + t);
                occ.push_back(scaled[i].back());
            }
        }
        if (xs.size() == 2) {
            occ.push_back(odot_big(t, xs[0], xs[1]));
            for (const auto& a : scaled[0])
                for (const auto& b : scaled[1])
                    occ.push_back(odot_big(t, a, b));
            for (const auto& f : fam[0])
                for (const auto& g : fam[1])
                    occ.push_back(odot_big(t, f, g));
        }
    } else if (pattern.is<QuadSequences>()) {
        const auto& q = pattern.as<QuadSequences>();
        const std::int64_t t = q.t.t;
        auto seq = [&](const char* base) {
            std::vector<BigInt> s;
            for (unsigned i = 1; i <= q.depth; ++i)
                s.push_back(ck.get(base + std::to_string(i)));
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!(s[i - 1] < s[i]))
                    ck.fail(std::string(base) + " sequence not strictly increasing");
            for (const auto& v : s)
                if (!ck.in_window(v))
                    ck.fail(std::string(base) + " entry outside window");
            return s;
        };
        const auto x = seq("x"), w = seq("w"), y = seq("y"), z = seq("z");
        for (std::size_t mask = 1; mask < (std::size_t{1} << q.depth); ++mask) {
            BigInt sx = 0, pw = 1, sy = 0, pz = 1;
            for (std::size_t i = 0; i < q.depth; ++i) {
                if (!(mask >> i & 1))
                    continue;
                sx += x[i];
                pw *= w[i];
                sy += y[i] + t;
                pz *= z[i] + t;
            }
            occ.insert(occ.end(), {sx, pw, sy, pz});
        }
    }
    return occ;
}

} // namespace

std::string check_solution(const PatternSpec& pattern, Window window, const SolutionTuple& tuple) {
    Vars vars;
    for (const auto& [name, v] : tuple.assignment) {
        if (!vars.emplace(name, BigInt(v)).second)
            return "duplicate variable " + name;
    }
    Checker ck{window, vars, {}};
    const auto occ = sorted_unique(expected_occupied(pattern, ck));
    if (!ck.failure.empty())
        return ck.failure;
    for (const auto& v : occ)
        if (!ck.in_window(v))
            return "occupied value outside window";
    std::vector<BigInt> got(tuple.occupied.begin(), tuple.occupied.end());
    if (got != occ)
        return "occupied set does not match the configuration";
    return {};
}

} // namespace symramsey
