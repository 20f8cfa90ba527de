#include "symramsey/largeness.hpp"

#include <algorithm>

#include "symramsey/match.hpp"

namespace symramsey {

using i64 = std::int64_t;

namespace {

Int128 floor_div(Int128 a, Int128 b) {
    Int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int128 ceil_div(Int128 a, Int128 b) { return -floor_div(-a, b); }

std::string run_note(i64 len) { return "longest run " + std::to_string(len); }

/// First start of a run of `len` consecutive true entries, and the longest run.
struct RunScan {
    std::optional<std::size_t> first;
    std::size_t longest = 0;
    std::size_t longest_at = 0;
};

RunScan scan_runs(const std::vector<char>& bits, std::size_t len) {
    RunScan r;
    std::size_t cur = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        cur = bits[i] ? cur + 1 : 0;
        if (cur > r.longest) {
            r.longest = cur;
            r.longest_at = i + 1 - cur;
        }
        if (!r.first && len > 0 && cur >= len)
            r.first = i + 1 - len;
    }
    return r;
}

} // namespace

FiniteSetWindow FiniteSetWindow::from_members(Window w, const std::set<i64>& members) {
    FiniteSetWindow a(w);
    for (i64 v : members)
        a.set(v);
    return a;
}

FiniteSetWindow FiniteSetWindow::from_runs(Window w, const std::vector<std::pair<i64, i64>>& runs) {
    FiniteSetWindow a(w);
    for (const auto& [lo, hi] : runs) {
        if (lo > hi || !w.contains(lo) || !w.contains(hi))
            throw ValidationError("run [" + std::to_string(lo) + "," + std::to_string(hi) + "] not inside " +
                                  w.to_string());
        for (i64 v = lo; v <= hi; ++v)
            a.set(v);
    }
    return a;
}

void FiniteSetWindow::set(i64 v, bool in) {
    if (!window_.contains(v))
        throw DomainError(std::to_string(v) + " lies outside " + window_.to_string());
    member_[window_.index(v)] = in;
}

std::size_t FiniteSetWindow::count() const { return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1)); }

std::set<i64> FiniteSetWindow::members() const {
    std::set<i64> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
        if (member_[i])
            out.insert(out.end(), window_.lo + static_cast<i64>(i));
    return out;
}

std::vector<std::pair<i64, i64>> FiniteSetWindow::runs() const {
    std::vector<std::pair<i64, i64>> out;
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (!member_[i])
            continue;
        const i64 v = window_.lo + static_cast<i64>(i);
        if (!out.empty() && out.back().second == v - 1)
            out.back().second = v;
        else
            out.emplace_back(v, v);
    }
    return out;
}

FiniteSetWindow FiniteSetWindow::complement() const {
    FiniteSetWindow c = *this;
    for (auto& b : c.member_)
        b = !b;
    return c;
}

FiniteSetWindow FiniteSetWindow::translated(i64 c) const {
    FiniteSetWindow out = *this;
    out.window_ = Window::make(arith::add(window_.lo, c), arith::add(window_.hi, c));
    return out;
}

void LargenessParams::validate() const {
    if (gap < 1 || run < 1 || translate_bound < 1)
        throw ValidationError("largeness parameters need g >= 1, L >= 1, m >= 1");
}

LargenessReport analyze_additive(const FiniteSetWindow& A, const LargenessParams& p) {
    p.validate();
    LargenessReport rep;
    rep.structure = "additive";
    rep.window = A.window();
    rep.params = p;
    const Window w = A.window();
    const std::size_t W = w.size();
    const auto L = static_cast<std::size_t>(p.run);
    const auto g = static_cast<std::size_t>(p.gap);

    std::vector<char> in(W), out(W);
    for (std::size_t i = 0; i < W; ++i) {
        in[i] = A.contains(w.lo + static_cast<i64>(i));
        out[i] = !in[i];
    }
    const auto at = [&](std::size_t i) { return w.lo + static_cast<i64>(i); };

    const RunScan members = scan_runs(in, L);
    if (members.first) {
        rep.thick = {true, {at(*members.first), p.run}, std::nullopt, ""};
    } else {
        rep.thick.counterexample = at(members.longest_at);
        rep.thick.note = run_note(static_cast<i64>(members.longest));
    }

    const RunScan holes = scan_runs(out, g);
    if (holes.first) {
        rep.syndetic.counterexample = at(*holes.first);
        rep.syndetic.note = "hole of length " + std::to_string(g);
    } else {
        rep.syndetic = {true, {static_cast<i64>(holes.longest)}, std::nullopt, "largest hole"};
    }

    // bad[i]: [i, i+g-1] lies in the window and misses A
    std::vector<char> bad(W, 0);
    std::size_t hole = 0;
    for (std::size_t i = W; i-- > 0;) {
        hole = in[i] ? 0 : hole + 1;
        bad[i] = hole >= g;
    }
    if (L <= W) {
        // [s, s+L-1] is good when no bad start lies in [s, s+L-g]
        std::vector<std::size_t> prefix(W + 1, 0);
        for (std::size_t i = 0; i < W; ++i)
            prefix[i + 1] = prefix[i] + static_cast<std::size_t>(bad[i]);
        for (std::size_t s = 0; s + L <= W; ++s) {
            const std::size_t span = L >= g ? L - g + 1 : 0;
            if (prefix[s + span] - prefix[s] == 0) {
                rep.pws = {true, {at(s), p.run}, std::nullopt, ""};
                break;
            }
        }
    }
    if (!rep.pws.holds) {
        const auto it = std::find(bad.begin(), bad.end(), 1);
        rep.pws.counterexample = it == bad.end() ? w.lo : at(static_cast<std::size_t>(it - bad.begin()));
        rep.pws.note = L > W ? "window shorter than L" : "every length-L subinterval has a hole of length g";
    }
    return rep;
}

namespace {

LargenessReport analyze_translates(const FiniteSetWindow& A, i64 l, i64 k, const LargenessParams& p,
                                   std::string structure) {
    p.validate();
    LargenessReport rep;
    rep.structure = std::move(structure);
    rep.window = A.window();
    rep.params = p;
    const Window w = A.window();
    const Int128 m = p.translate_bound;

    // phi(a) = l a + k; phi(f (*) y) = phi(f) phi(y). F takes every phi value
    // v = 1 (mod l) in [1, m]; M is the largest.
    const Int128 M = m - (((m - k) % l) + l) % l;
    const Int128 phi_hi = Int128(l) * w.hi + k;
    const Int128 y_lo = std::max<Int128>(w.lo, ceil_div(1 - Int128(k), l));
    const Int128 y_hi = phi_hi < 1 ? y_lo - 1 : floor_div(floor_div(phi_hi, M) - k, l);
    auto fail_all = [&](const std::string& note) {
        for (Verdict* v : {&rep.thick, &rep.syndetic, &rep.pws}) {
            v->counterexample = w.lo;
            v->note = note;
        }
        return rep;
    };
    if (M < 1 || y_hi < y_lo)
        return fail_all("empty interior");
    const Window I = Window::make(static_cast<i64>(y_lo), static_cast<i64>(y_hi));
    rep.interior = I;

    for (Int128 v = 1; v <= M; v += l) // k = 1 (mod l)
        rep.translates.push_back(static_cast<i64>((v - k) / l));

    // star(f, y) = phi^{-1}(phi(f) phi(y))
    auto star_at = [&](i64 f, i64 y) {
        const Int128 prod = (Int128(l) * f + k) * (Int128(l) * y + k);
        return static_cast<i64>((prod - k) / l);
    };
    std::vector<char> covered(I.size(), 0);
    std::set<i64> cover;
    std::optional<i64> thick_x;
    for (i64 y = I.lo; y <= I.hi; ++y) {
        bool all = true;
        for (i64 f : rep.translates) {
            const bool hit = A.contains(star_at(f, y));
            if (hit && !covered[I.index(y)]) {
                covered[I.index(y)] = 1;
                cover.insert(f);
            }
            all = all && hit;
        }
        if (all && !thick_x)
            thick_x = y;
    }

    if (thick_x) {
        rep.thick = {true, {*thick_x}, std::nullopt, ""};
    } else {
        rep.thick.counterexample = I.lo;
        rep.thick.note = "no x in the interior has F (*) x inside A";
    }

    const auto gap = std::find(covered.begin(), covered.end(), 0);
    if (gap == covered.end()) {
        rep.syndetic = {true, std::vector<i64>(cover.begin(), cover.end()), std::nullopt, "cover"};
    } else {
        rep.syndetic.counterexample = I.lo + (gap - covered.begin());
        rep.syndetic.note = "uncovered by every translate";
    }

    const RunScan runs = scan_runs(covered, static_cast<std::size_t>(p.run));
    if (runs.first) {
        rep.pws = {true, {I.lo + static_cast<i64>(*runs.first), p.run}, std::nullopt, ""};
    } else {
        rep.pws.counterexample = I.lo + static_cast<i64>(runs.longest_at);
        rep.pws.note = run_note(static_cast<i64>(runs.longest));
    }
    return rep;
}

} // namespace

LargenessReport analyze_multiplicative(const FiniteSetWindow& A, const LargenessParams& p) {
    if (A.window().lo < 1)
        throw ValidationError("multiplicative analysis needs a positive window, got " + A.window().to_string());
    return analyze_translates(A, 1, 0, p, "multiplicative");
}

LargenessReport analyze_star(const FiniteSetWindow& A, const StarParams& sp, const LargenessParams& p) {
    if (sp.l() < 1)
        throw ValidationError("translate sets need l >= 1, got l=" + std::to_string(sp.l()));
    if (!sp.has_identity())
        throw ValidationError("translate sets need l | (k-1); got l=" + std::to_string(sp.l()) +
                              ", k=" + std::to_string(sp.k()));
    auto rep = analyze_translates(A, sp.l(), sp.k(), p, "star");
    rep.star = sp;
    rep.implied_additive_pws = analyze_additive(A, p).pws.holds;
    if (rep.pws.holds && A.window().size() >= (std::size_t{1} << 12)) {
        const auto run = ap_longest(A.members(), 4);
        rep.ap_experiment = ApExperiment{run.length, run.terms, run.length >= 3};
    }
    return rep;
}

PullbackComparison pullback_compare(const FiniteSetWindow& A, AffineShift t, const LargenessParams& p) {
    PullbackComparison cmp;
    const auto shifted = A.translated(t.t);
    cmp.multiplicative = analyze_multiplicative(A, p);
    cmp.shifted = analyze_star(shifted, t.as_star(), p);
    cmp.additive_pws_a = analyze_additive(A, p).pws.holds;
    cmp.additive_pws_shifted = *cmp.shifted.implied_additive_pws;

    const auto& a = cmp.multiplicative;
    const auto& b = cmp.shifted;
    bool same_interior = a.interior.has_value() == b.interior.has_value();
    if (same_interior && a.interior)
        same_interior = a.interior->lo + t.t == b.interior->lo && a.interior->hi + t.t == b.interior->hi;
    cmp.agreement = same_interior && a.thick.holds == b.thick.holds && a.syndetic.holds == b.syndetic.holds &&
                    a.pws.holds == b.pws.holds && cmp.additive_pws_a == cmp.additive_pws_shifted;
    return cmp;
}

} // namespace symramsey
