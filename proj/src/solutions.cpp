#include "symramsey/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace symramsey {

using arith::add;
using arith::mul;
using arith::sub;
using i64 = std::int64_t;

std::int64_t SolutionTuple::value(const std::string& var) const {
    for (const auto& [name, v] : assignment)
        if (name == var)
            return v;
    throw DomainError("solution has no variable '" + var + "'");
}

std::vector<std::int64_t> SolutionTuple::values() const {
    std::vector<i64> out;
    out.reserve(assignment.size());
    for (const auto& kv : assignment)
        out.push_back(kv.second);
    return out;
}

bool solution_less(const SolutionTuple& a, const SolutionTuple& b) {
    if (a.order_key != b.order_key)
        return a.order_key < b.order_key;
    return a.values() < b.values();
}

namespace detail {

std::vector<std::int64_t> signed_divisors(std::int64_t n) {
    if (n == 0)
        throw DomainError("divisors of zero");
    if (n == INT64_MIN)
        throw OverflowError("cannot factor INT64_MIN");
    const i64 m = n < 0 ? -n : n;
    std::vector<i64> out;
    for (i64 i = 1; i <= m / i; ++i) {
        if (m % i == 0) {
            out.push_back(i);
            if (i != m / i)
                out.push_back(m / i);
        }
    }
    const std::size_t positive = out.size();
    for (std::size_t i = 0; i < positive; ++i)
        out.push_back(-out[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> quad_part(int part, std::int64_t t, const std::vector<std::int64_t>& seq) {
    std::vector<i64> out;
    const std::size_t n = seq.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        i64 acc = 0;
        std::size_t count = 0;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1))
                continue;
            ++count;
            switch (part) {
            case 0: acc = first ? seq[i] : add(acc, seq[i]); break;
            case 1: acc = first ? seq[i] : mul(acc, seq[i]); break;
            case 2: acc = first ? seq[i] : add(acc, seq[i]); break;
            default: acc = first ? add(seq[i], t) : mul(acc, add(seq[i], t)); break;
            }
            first = false;
        }
        if (part == 2) // sum + (|a|-1) t + t
            acc = add(acc, mul(static_cast<i64>(count), t));
        out.push_back(acc);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> mixed_union(std::int64_t t, const std::vector<std::vector<std::int64_t>>& families,
                                      const std::vector<std::int64_t>& xs) {
    auto od = [t](i64 a, i64 b) { return add(mul(sub(a, t), sub(b, t)), t); };
    std::vector<i64> out;
    std::vector<std::vector<i64>> scaled(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.push_back(xs[i]);
        for (i64 f : families[i]) {
            out.push_back(f);
            scaled[i].push_back(od(f, xs[i]));
            out.push_back(scaled[i].back());
        }
    }
    if (xs.size() == 2) {
        out.push_back(od(xs[0], xs[1]));
        for (i64 a : scaled[0])
            for (i64 b : scaled[1])
                out.push_back(od(a, b));
        for (i64 f : families[0])
            for (i64 g : families[1])
                out.push_back(od(f, g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

namespace {

using Assignment = std::vector<std::pair<std::string, i64>>;

SolutionTuple make_tuple(Assignment assignment, std::vector<i64> occupied) {
    std::sort(occupied.begin(), occupied.end());
    occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
    SolutionTuple t;
    t.assignment = std::move(assignment);
    t.order_key = {occupied};
    t.occupied = std::move(occupied);
    return t;
}

std::string indexed(const std::string& base, std::size_t i) {
    return base + std::to_string(i + 1);
}

// Every enumerator returns false once the visitor asked to stop.

bool enum_ap(const Ap& p, Window w, const SolutionVisitor& visit) {
    const i64 span = static_cast<i64>(p.length) - 1;
    for (i64 a = w.lo; a <= w.hi; ++a) {
        if (span == 0) {
            if (!visit(make_tuple({{"a", a}, {"d", 1}}, {a})))
                return false;
            continue;
        }
        for (i64 d = 1; add(a, mul(span, d)) <= w.hi; ++d) {
            std::vector<i64> occ;
            for (i64 i = 0; i <= span; ++i)
                occ.push_back(a + i * d);
            if (!visit(make_tuple({{"a", a}, {"d", d}}, std::move(occ))))
                return false;
        }
    }
    return true;
}

bool enum_poly(const PolyVdw& p, Window w, const SolutionVisitor& visit) {
    // |P(d)| <= width forces d <= width + sum|c_i| + 1 for every nonzero P
    i64 dmax = -1;
    for (const auto& q : p.polys) {
        if (q.degree() == 0)
            continue;
        i64 bound = static_cast<i64>(w.size());
        for (i64 c : q.coeffs)
            bound = add(bound, c < 0 ? -c : c);
        bound = add(bound, i64{1});
        dmax = dmax < 0 ? bound : std::min(dmax, bound);
    }
    if (dmax < 0)
        dmax = 1; // all polynomials vanish: d is immaterial
    for (i64 d = 1; d <= dmax; ++d) {
        std::vector<i64> shifts;
        for (const auto& q : p.polys)
            shifts.push_back(q.eval<i64>(d));
        for (i64 a = w.lo; a <= w.hi; ++a) {
            std::vector<i64> occ{a};
            bool ok = true;
            for (i64 s : shifts) {
                const i64 v = add(a, s);
                if (!w.contains(v)) {
                    ok = false;
                    break;
                }
                occ.push_back(v);
            }
            if (ok && !visit(make_tuple({{"a", a}, {"d", d}}, std::move(occ))))
                return false;
        }
    }
    return true;
}

bool enum_schur(const SchurTriple& s, Window w, const SolutionVisitor& visit) {
    for (i64 x = w.lo; x <= w.hi; ++x) {
        for (i64 y = s.allow_equal ? x : x + 1; y <= w.hi; ++y) {
            i64 z;
            switch (s.op) {
            case SchurOp::add: z = add(x, y); break;
            case SchurOp::mul: z = mul(x, y); break;
            default: z = star<i64>(*s.star, x, y); break;
            }
            if (!w.contains(z))
                continue;
            if (!visit(make_tuple({{"x", x}, {"y", y}, {"z", z}}, {x, y, z})))
                return false;
        }
    }
    return true;
}

bool enum_moreira_like(bool blm, Window w, const SolutionVisitor& visit) {
    for (i64 x = w.lo; x <= w.hi; ++x) {
        for (i64 y = w.lo; y <= w.hi; ++y) {
            const i64 prod = mul(x, y);
            const i64 mid = blm ? add(add(x, y), prod) : add(x, y);
            if (!w.contains(prod) || !w.contains(mid))
                continue;
            if (!visit(make_tuple({{"x", x}, {"y", y}}, {x, mid, prod})))
                return false;
        }
    }
    return true;
}

bool enum_sigma(const SigmaConfig& s, Window w, const SolutionVisitor& visit) {
    const AffineShift t = s.t;
    std::vector<i64> xs;
    std::vector<i64> folds;
    std::function<bool(i64)> rec = [&](i64 start) -> bool {
        for (i64 x = start; x <= w.hi; ++x) {
            const std::size_t before = folds.size();
            bool ok = true;
            folds.push_back(x);
            for (std::size_t i = 0; i < before; ++i) {
                const i64 v = odot<i64>(t, folds[i], x);
                if (!w.contains(v)) {
                    ok = false;
                    break;
                }
                folds.push_back(v);
            }
            if (ok) {
                xs.push_back(x);
                if (xs.size() == s.depth) {
                    Assignment as;
                    for (std::size_t i = 0; i < xs.size(); ++i)
                        as.emplace_back(indexed("x", i), xs[i]);
                    if (!visit(make_tuple(std::move(as), folds)))
                        return false;
                } else if (!rec(x + 1)) {
                    return false;
                }
                xs.pop_back();
            }
            folds.resize(before);
        }
        return true;
    };
    return rec(w.lo);
}

/// Calls emit(ys) for every ordered (y_1..y_n) in the window with
/// (l y_1 + k)...(l y_n + k) == target.
bool factor_product(const StarParams& sp, i64 target, unsigned n, Window w,
                    const std::function<bool(const std::vector<i64>&)>& emit) {
    std::vector<i64> ys;
    std::function<bool(i64, unsigned)> rec = [&](i64 rest, unsigned left) -> bool {
        auto admissible = [&](i64 f, i64& y) {
            const i64 num = sub(f, sp.k());
            if (num % sp.l() != 0)
                return false;
            y = num / sp.l();
            return w.contains(y);
        };
        if (left == 1) {
            i64 y;
            if (!admissible(rest, y))
                return true;
            ys.push_back(y);
            const bool more = emit(ys);
            ys.pop_back();
            return more;
        }
        for (i64 f : detail::signed_divisors(rest)) {
            i64 y;
            if (!admissible(f, y))
                continue;
            ys.push_back(y);
            const bool more = rec(rest / f, left - 1);
            ys.pop_back();
            if (!more)
                return false;
        }
        return true;
    };
    return rec(target, n);
}

std::vector<std::string> rhs_names(const GlueEquation& g) {
    std::vector<std::string> out;
    if (g.lhs == GlueEquation::Lhs::system) {
        for (unsigned i = 0; i < g.arity; ++i)
            out.push_back(indexed("y", i));
        return out;
    }
    const bool poly = g.lhs == GlueEquation::Lhs::poly;
    if (g.arity == 2)
        return poly ? std::vector<std::string>{"z", "w"} : std::vector<std::string>{"c", "d"};
    for (unsigned i = 0; i < g.arity; ++i)
        out.push_back(indexed(poly ? "z" : "c", i));
    return out;
}

bool enum_glue(const GlueEquation& g, Window w, const SolutionVisitor& visit) {
    const auto names = rhs_names(g);
    // Emits every right-hand factorization of value v, prefixed by `lhs` variables.
    auto emit_rhs = [&](i64 v, const Assignment& lhs, const std::vector<i64>& lhs_occ) -> bool {
        const i64 target = add(mul(g.star.l(), v), g.star.k());
        if (target == 0)
            return true;
        return factor_product(g.star, target, g.arity, w, [&](const std::vector<i64>& ys) {
            Assignment as = lhs;
            std::vector<i64> occ = lhs_occ;
            for (std::size_t i = 0; i < ys.size(); ++i) {
                as.emplace_back(names[i], ys[i]);
                occ.push_back(ys[i]);
            }
            return visit(make_tuple(std::move(as), std::move(occ)));
        });
    };

    switch (g.lhs) {
    case GlueEquation::Lhs::poly: {
        const auto& P = g.polys.front();
        for (i64 x = w.lo; x <= w.hi; ++x)
            for (i64 y = w.lo; y <= w.hi; ++y) {
                if (g.distinct && x == y)
                    continue;
                const i64 v = add(x, P.eval<i64>(sub(y, x)));
                if (!emit_rhs(v, {{"x", x}, {"y", y}}, {x, y}))
                    return false;
            }
        return true;
    }
    case GlueEquation::Lhs::mean: {
        for (i64 a = w.lo; a <= w.hi; ++a)
            for (i64 b = w.lo; b <= w.hi; ++b) {
                if (g.distinct && a == b)
                    continue;
                const i64 s = add(a, b);
                if (s % 2 != 0)
                    continue;
                if (!emit_rhs(s / 2, {{"a", a}, {"b", b}}, {a, b}))
                    return false;
            }
        return true;
    }
    case GlueEquation::Lhs::system: {
        const std::size_t m = g.polys.size();
        for (i64 x = w.lo; x <= w.hi; ++x)
            for (i64 y = w.lo; y <= w.hi; ++y) {
                if (g.distinct && x == y)
                    continue;
                std::vector<i64> shifts;
                for (const auto& P : g.polys)
                    shifts.push_back(P.eval<i64>(sub(y, x)));
                for (i64 x1 = w.lo; x1 <= w.hi; ++x1) {
                    const i64 v = sub(x1, shifts[0]);
                    Assignment as{{"x", x}, {"y", y}, {"x1", x1}};
                    std::vector<i64> occ{x, y, x1};
                    bool ok = true;
                    for (std::size_t i = 1; i < m && ok; ++i) {
                        const i64 xi = add(v, shifts[i]);
                        ok = w.contains(xi);
                        as.emplace_back(indexed("x", i), xi);
                        occ.push_back(xi);
                    }
                    if (ok && !emit_rhs(v, as, occ))
                        return false;
                }
            }
        return true;
    }
    }
    return true;
}

} // namespace

namespace detail {

std::vector<SolutionTuple> mixed_family_members(const PatternSpec& family, Window w, std::int64_t t) {
    auto all = enumerate_solutions(family, w);
    std::vector<SolutionTuple> out;
    for (auto& s : all) {
        if (std::binary_search(s.occupied.begin(), s.occupied.end(), t))
            continue; // t absorbs under (.)_t
        if (!out.empty() && out.back().occupied == s.occupied)
            continue;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::int64_t> mixed_x_domain(Window w, std::int64_t t) {
    std::vector<i64> out;
    for (i64 x = w.lo; x <= w.hi; ++x)
        if (x != t && x != t + 1) // absorbing and neutral elements collapse F (.)_t x
            out.push_back(x);
    return out;
}

} // namespace detail

namespace {

bool all_in(const std::vector<i64>& vs, Window w) {
    return std::all_of(vs.begin(), vs.end(), [&](i64 v) { return w.contains(v); });
}

bool enum_mixed(const MixedConfig& m, Window w, const SolutionVisitor& visit) {
    const i64 t = m.t.t;
    const auto fams = detail::mixed_family_members(*m.family, w, t);
    const auto xs_domain = detail::mixed_x_domain(w, t);

    auto build = [&](const std::vector<const SolutionTuple*>& fs, const std::vector<i64>& xs) -> bool {
        std::vector<std::vector<i64>> sets;
        for (auto* f : fs)
            sets.push_back(f->occupied);
        const auto uni = detail::mixed_union(t, sets, xs);
        if (!all_in(uni, w))
            return true;
        Assignment as;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (const auto& [name, v] : fs[i]->assignment)
                as.emplace_back(indexed("F", i) + "." + name, v);
            as.emplace_back(indexed("x", i), xs[i]);
        }
        return visit(make_tuple(std::move(as), uni));
    };

    // Single-level admissibility: F (.)_t x inside the window.
    auto level_ok = [&](const SolutionTuple& f, i64 x) {
        for (i64 v : f.occupied)
            if (!w.contains(odot<i64>(m.t, v, x)))
                return false;
        return true;
    };

    if (m.depth == 1) {
        for (const auto& f : fams)
            for (i64 x : xs_domain)
                if (level_ok(f, x) && !build({&f}, {x}))
                    return false;
        return true;
    }
    for (const auto& f1 : fams)
        for (std::size_t i = 0; i < xs_domain.size(); ++i) {
            const i64 x1 = xs_domain[i];
            if (!level_ok(f1, x1))
                continue;
            for (const auto& f2 : fams)
                for (std::size_t j = i + 1; j < xs_domain.size(); ++j) {
                    const i64 x2 = xs_domain[j];
                    if (level_ok(f2, x2) && !build({&f1, &f2}, {x1, x2}))
                        return false;
                }
        }
    return true;
}

} // namespace

namespace detail {

std::vector<std::vector<QuadCandidate>> quad_candidates(const QuadSequences& q, Window w) {
    std::vector<std::vector<QuadCandidate>> parts(4);
    std::vector<i64> seq;
    std::function<void(i64)> rec = [&](i64 start) {
        for (i64 v = start; v <= w.hi; ++v) {
            seq.push_back(v);
            if (seq.size() == q.depth) {
                for (int p = 0; p < 4; ++p) {
                    auto set = quad_part(p, q.t.t, seq);
                    if (all_in(set, w))
                        parts[p].push_back({std::move(set), seq});
                }
            } else {
                rec(v + 1);
            }
            seq.pop_back();
        }
    };
    rec(w.lo);
    for (auto& p : parts)
        std::sort(p.begin(), p.end(), [](const QuadCandidate& a, const QuadCandidate& b) {
            return std::tie(a.set, a.seq) < std::tie(b.set, b.seq);
        });
    return parts;
}

} // namespace detail

namespace {

// Part order in the key and assignment: x (FS), w (FP), y (t+FS_{-t}), z (t+sigma_{-t}).
constexpr const char* kQuadNames[4] = {"x", "w", "y", "z"};

SolutionTuple quad_tuple(const std::vector<const detail::QuadCandidate*>& pick) {
    SolutionTuple tup;
    std::vector<i64> occ;
    for (int p = 0; p < 4; ++p) {
        tup.order_key.push_back(pick[p]->set);
        tup.order_key.push_back(pick[p]->seq);
        for (std::size_t i = 0; i < pick[p]->seq.size(); ++i)
            tup.assignment.emplace_back(indexed(kQuadNames[p], i), pick[p]->seq[i]);
        occ.insert(occ.end(), pick[p]->set.begin(), pick[p]->set.end());
    }
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    tup.occupied = std::move(occ);
    return tup;
}

/// Product of the part lists in nesting order, which is also solution_less order.
bool enum_quad(const QuadSequences& q, Window w, const SolutionVisitor& visit) {
    const auto parts = detail::quad_candidates(q, w);
    for (const auto& a : parts[0])
        for (const auto& b : parts[1])
            for (const auto& c : parts[2])
                for (const auto& d : parts[3])
                    if (!visit(quad_tuple({&a, &b, &c, &d})))
                        return false;
    return true;
}

} // namespace

void for_each_solution(const PatternSpec& pattern, Window window, const SolutionVisitor& visit) {
    pattern.validate();
    try {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, Ap>)
                    enum_ap(p, window, visit);
                else if constexpr (std::is_same_v<T, PolyVdw>)
                    enum_poly(p, window, visit);
                else if constexpr (std::is_same_v<T, SchurTriple>)
                    enum_schur(p, window, visit);
                else if constexpr (std::is_same_v<T, MoreiraTriple>)
                    enum_moreira_like(false, window, visit);
                else if constexpr (std::is_same_v<T, BlmTriple>)
                    enum_moreira_like(true, window, visit);
                else if constexpr (std::is_same_v<T, SigmaConfig>)
                    enum_sigma(p, window, visit);
                else if constexpr (std::is_same_v<T, GlueEquation>)
                    enum_glue(p, window, visit);
                else if constexpr (std::is_same_v<T, MixedConfig>)
                    enum_mixed(p, window, visit);
                else
                    enum_quad(p, window, visit);
            },
            pattern.kind);
    } catch (const OverflowError& e) {
        throw OverflowError("enumerating " + pattern.name() + " on " + window.to_string() +
                            " exceeds 64-bit arithmetic (" + e.what() + ")");
    }
}

std::vector<SolutionTuple> enumerate_solutions(const PatternSpec& pattern, Window window, std::size_t limit) {
    if (limit < 1)
        throw ValidationError("limit must be at least 1");
    std::vector<SolutionTuple> out;
    if (pattern.is<QuadSequences>()) {
        // already produced in order
        for_each_solution(pattern, window, [&](const SolutionTuple& s) {
            out.push_back(s);
            return out.size() < limit;
        });
        return out;
    }
    for_each_solution(pattern, window, [&](const SolutionTuple& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end(), solution_less);
    if (out.size() > limit)
        out.resize(limit);
    return out;
}

} // namespace symramsey
