#include "symramsey/match.hpp"

#include <algorithm>

namespace symramsey {

using i64 = std::int64_t;

namespace {

bool mono(const Coloring& c, const std::vector<i64>& vs, int color) {
    for (i64 v : vs)
        if (!c.window().contains(v) || c.color_of(v) != color)
            return false;
    return true;
}

void keep_least(std::optional<SolutionTuple>& best, SolutionTuple cand) {
    if (!best || solution_less(cand, *best))
        best = std::move(cand);
}

std::optional<Witness> to_witness(const std::optional<SolutionTuple>& best, const Coloring& coloring,
                                  const std::string& name) {
    if (!best)
        return std::nullopt;
    return Witness{*best, coloring.color_of(best->occupied.front()), name, coloring.window()};
}

std::string indexed(const std::string& base, std::size_t i) {
    return base + std::to_string(i + 1);
}

} // namespace

std::optional<Witness> find_monochromatic(const Coloring& coloring, const PatternSpec& pattern) {
    if (pattern.is<MixedConfig>()) {
        const auto& m = pattern.as<MixedConfig>();
        auto w = find_mixed_configuration(coloring, *m.family, m.t, m.depth);
        if (w)
            w->pattern = pattern.name();
        return w;
    }
    if (pattern.is<QuadSequences>()) {
        const auto& q = pattern.as<QuadSequences>();
        return find_quad_sequences(coloring, q.t, q.depth);
    }
    std::optional<SolutionTuple> best;
    for_each_solution(pattern, coloring.window(), [&](const SolutionTuple& s) {
        if (mono(coloring, s.occupied, coloring.color_of(s.occupied.front())))
            keep_least(best, s);
        return true;
    });
    return to_witness(best, coloring, pattern.name());
}

std::optional<Witness> find_mixed_configuration(const Coloring& coloring, const PatternSpec& family, AffineShift t,
                                                unsigned depth) {
    if (depth < 1 || depth > 2)
        throw ValidationError("mixed configuration depth must be 1 or 2");
    const PatternSpec spec{MixedConfig{std::make_shared<const PatternSpec>(family), t, depth}};
    spec.validate();
    const Window w = coloring.window();
    const auto fams = detail::mixed_family_members(family, w, t.t);
    const auto xs = detail::mixed_x_domain(w, t.t);

    struct Level {
        const SolutionTuple* f;
        i64 x;
        int color;
        std::vector<i64> scaled;
    };
    // single-level pieces F u {x} u F (.)_t x, all one color
    std::vector<Level> levels;
    for (const auto& f : fams) {
        const int c = coloring.color_of(f.occupied.front());
        if (!mono(coloring, f.occupied, c))
            continue;
        for (i64 x : xs) {
            if (coloring.color_of(x) != c)
                continue;
            std::vector<i64> scaled;
            bool ok = true;
            for (i64 v : f.occupied) {
                const i64 s = odot<i64>(t, v, x);
                if (!w.contains(s) || coloring.color_of(s) != c) {
                    ok = false;
                    break;
                }
                scaled.push_back(s);
            }
            if (ok)
                levels.push_back({&f, x, c, std::move(scaled)});
        }
    }

    auto tuple_of = [&](const std::vector<const Level*>& pick) {
        std::vector<std::vector<i64>> sets;
        std::vector<i64> x;
        SolutionTuple tup;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            sets.push_back(pick[i]->f->occupied);
            x.push_back(pick[i]->x);
            for (const auto& [name, v] : pick[i]->f->assignment)
                tup.assignment.emplace_back(indexed("F", i) + "." + name, v);
            tup.assignment.emplace_back(indexed("x", i), pick[i]->x);
        }
        tup.occupied = detail::mixed_union(t.t, sets, x);
        tup.order_key = {tup.occupied};
        return tup;
    };

    std::optional<SolutionTuple> best;
    if (depth == 1) {
        for (const auto& lv : levels)
            keep_least(best, tuple_of({&lv}));
        return to_witness(best, coloring, spec.name());
    }
    for (const auto& a : levels) {
        for (const auto& b : levels) {
            if (b.color != a.color || !(a.x < b.x))
                continue;
            const int c = a.color;
            auto ok = [&](i64 u, i64 v) {
                const i64 s = odot<i64>(t, u, v);
                return w.contains(s) && coloring.color_of(s) == c;
            };
            bool good = ok(a.x, b.x);
            for (std::size_t i = 0; good && i < a.scaled.size(); ++i)
                for (std::size_t j = 0; good && j < b.scaled.size(); ++j)
                    good = ok(a.scaled[i], b.scaled[j]);
            for (std::size_t i = 0; good && i < a.f->occupied.size(); ++i)
                for (std::size_t j = 0; good && j < b.f->occupied.size(); ++j)
                    good = ok(a.f->occupied[i], b.f->occupied[j]);
            if (good)
                keep_least(best, tuple_of({&a, &b}));
        }
    }
    return to_witness(best, coloring, spec.name());
}

std::optional<Witness> find_quad_sequences(const Coloring& coloring, AffineShift t, unsigned depth) {
    if (depth < 1 || depth > 2)
        throw ValidationError("quad sequence depth must be 1 or 2");
    const QuadSequences q{t, depth};
    const PatternSpec spec{q};
    const auto parts = detail::quad_candidates(q, coloring.window());
    static constexpr const char* names[4] = {"x", "w", "y", "z"};

    std::optional<SolutionTuple> best;
    for (int c = 0; c < coloring.colors(); ++c) {
        // part lists are sorted, so the first monochromatic entry of each is least
        std::vector<const detail::QuadCandidate*> pick;
        for (const auto& part : parts) {
            auto it = std::find_if(part.begin(), part.end(),
                                   [&](const detail::QuadCandidate& qc) { return mono(coloring, qc.set, c); });
            if (it == part.end())
                break;
            pick.push_back(&*it);
        }
        if (pick.size() != 4)
            continue;
        SolutionTuple tup;
        for (int p = 0; p < 4; ++p) {
            tup.order_key.push_back(pick[p]->set);
            tup.order_key.push_back(pick[p]->seq);
            for (std::size_t i = 0; i < pick[p]->seq.size(); ++i)
                tup.assignment.emplace_back(indexed(names[p], i), pick[p]->seq[i]);
            tup.occupied.insert(tup.occupied.end(), pick[p]->set.begin(), pick[p]->set.end());
        }
        std::sort(tup.occupied.begin(), tup.occupied.end());
        tup.occupied.erase(std::unique(tup.occupied.begin(), tup.occupied.end()), tup.occupied.end());
        keep_least(best, std::move(tup));
    }
    return to_witness(best, coloring, spec.name());
}

ApRun ap_longest(const std::set<i64>& A, std::size_t max_len) {
    if (A.empty())
        throw DomainError("ap_longest of an empty set");
    ApRun best;
    best.length = 1;
    best.start = *A.begin();
    best.step = 1;
    best.terms = {best.start};
    if (max_len <= 1)
        return best;
    for (auto ia = A.begin(); ia != A.end(); ++ia) {
        for (auto ib = std::next(ia); ib != A.end(); ++ib) {
            const i64 d = *ib - *ia;
            std::size_t len = 2;
            i64 next = *ib + d;
            while (len < max_len && A.count(next)) {
                ++len;
                next += d;
            }
            if (len > best.length) {
                best.length = len;
                best.start = *ia;
                best.step = d;
                if (len == max_len) {
                    ia = std::prev(A.end());
                    break;
                }
            }
        }
    }
    best.terms.clear();
    for (std::size_t i = 0; i < best.length; ++i)
        best.terms.push_back(best.start + static_cast<i64>(i) * best.step);
    return best;
}

} // namespace symramsey
