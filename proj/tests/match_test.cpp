#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "symramsey/error.hpp"
#include "symramsey/match.hpp"

using namespace symramsey;
using i64 = std::int64_t;

namespace {

Coloring random_coloring(Window w, int r, std::mt19937_64& rng) {
    std::vector<int> c(w.size());
    for (auto& v : c)
        v = static_cast<int>(rng() % static_cast<unsigned>(r));
    return Coloring(w, r, c);
}

} // namespace

TEST_CASE("monochromatic AP in a constant coloring") {
    const auto w = find_monochromatic(Coloring::constant(Window::positive(9), 1), PatternSpec::parse("ap:3"));
    REQUIRE(w);
    CHECK(w->solution.occupied == std::vector<i64>{1, 2, 3});
    CHECK(w->color == 0);
    CHECK(w->pattern == "ap:3");
}

TEST_CASE("sum-free two-coloring of [1,4]") {
    const Coloring c(Window::positive(4), 2, {0, 1, 1, 0});
    CHECK_FALSE(find_monochromatic(c, PatternSpec::parse("schur:add")));
    const Coloring d(Window::positive(5), 2, {0, 1, 1, 0, 0});
    CHECK(find_monochromatic(d, PatternSpec::parse("schur:add")));
}

TEST_CASE("star Schur triple in a constant coloring") {
    const auto one = Coloring::constant(Window::positive(15), 1);
    // 1 (*) 2 = 5 under l = k = 1; {1, 2, 5} precedes {1, 3} from 1 (*) 1.
    const auto w = find_monochromatic(one, PatternSpec::parse("schur:star:1,1:distinct"));
    REQUIRE(w);
    CHECK(w->solution.values() == std::vector<i64>{1, 2, 5});
    const auto e = find_monochromatic(one, PatternSpec::parse("schur:star:1,1"));
    REQUIRE(e);
    CHECK(e->solution.values() == std::vector<i64>{1, 2, 5});
}

TEST_CASE("witness equals least brute-force configuration") {
    std::mt19937_64 rng(11);
    const std::vector<std::string> names = {"ap:3", "poly:d^2", "schur:add", "schur:mul", "schur:star:1,-1",
                                            "moreira", "blm", "sigma:t=1:d=2", "glue:poly=d^2:star=1,1",
                                            "glue:mean:star=1,1", "glue:poly=2*d:star=2,3"};
    for (const auto& n : names) {
        const auto p = PatternSpec::parse(n);
        for (const auto win : {Window::make(1, 18), Window::make(-4, 14)}) {
            const auto all = brute::configs(p, win);
            for (int trial = 0; trial < 60; ++trial) {
                const auto c = random_coloring(win, 2 + trial % 2, rng);
                INFO(n, " trial ", trial);
                const auto got = find_monochromatic(c, p);
                const auto want = brute::least_mono(all, c);
                REQUIRE(got.has_value() == want.has_value());
                if (got) {
                    CHECK(got->solution.occupied == want->second);
                    CHECK(got->solution.values() == want->first);
                    CHECK(got->color == c.color_of(want->second.front()));
                    CHECK(check_solution(p, win, got->solution) == "");
                }
            }
        }
    }
}

TEST_CASE("mixed configuration examples") {
    const auto ap3 = PatternSpec::parse("ap:3");
    const auto one = Coloring::constant(Window::positive(100), 1);
    const auto w = find_mixed_configuration(one, ap3, AffineShift{1}, 1);
    REQUIRE(w);
    CHECK(w->solution.value("x1") == 3);
    std::vector<i64> fam;
    for (const auto& [name, v] : w->solution.assignment)
        if (name == "F1.a" || name == "F1.d")
            fam.push_back(v);
    CHECK(fam == std::vector<i64>{2, 1}); // F = {2, 3, 4}

    // Parity classes on [1,50], t = 0. F = {3,5,7}, x = 3 is one odd witness;
    // the least is F = {1,3,5}, x = 7 since {1,3,5,7,..} < {1,3,5,9,..}.
    std::vector<int> par(50);
    for (int i = 0; i < 50; ++i)
        par[i] = (i + 1) % 2;
    const Coloring parity(Window::positive(50), 2, par);
    const auto pw = find_mixed_configuration(parity, ap3, AffineShift{0}, 1);
    REQUIRE(pw);
    CHECK(pw->solution.value("F1.a") == 1);
    CHECK(pw->solution.value("F1.d") == 2);
    CHECK(pw->solution.value("x1") == 7);
    for (i64 v : pw->solution.occupied)
        CHECK(v % 2 == 1);
    const auto mixed = PatternSpec::parse("mixed:t=0:d=1:ap:3");
    const auto sols = enumerate_solutions(mixed, Window::positive(50));
    bool seen = false;
    for (const auto& s : sols)
        if (s.values() == std::vector<i64>{3, 2, 3}) {
            seen = true;
            CHECK(s.occupied == std::vector<i64>{3, 5, 7, 9, 15, 21});
        }
    CHECK(seen);

    CHECK_THROWS_AS(find_mixed_configuration(one, ap3, AffineShift{0}, 3), ValidationError);
}

TEST_CASE("mixed and quad witnesses agree with brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto win = Window::make(1, 30);
        const auto c = random_coloring(win, 2, rng);
        const auto p = PatternSpec::parse("mixed:t=0:d=1:ap:3");
        const auto want = brute::least_mono(brute::configs(p, win), c);
        const auto got = find_monochromatic(c, p);
        REQUIRE(got.has_value() == want.has_value());
        if (got)
            CHECK(got->solution.occupied == want->second);
    }
    for (int trial = 0; trial < 30; ++trial) {
        const auto win = Window::make(1, 12);
        const auto c = trial == 0 ? Coloring::constant(win, 2) : random_coloring(win, 2, rng);
        const auto p = PatternSpec::parse("quad:t=0:d=1");
        // Quad witnesses are least part by part: order brute-force configs the same way.
        const auto all = brute::configs(p, win);
        std::optional<std::vector<i64>> best;
        for (const auto& cfg : all) {
            const int col = c.color_of(cfg.second.front());
            bool mono = true;
            for (i64 v : cfg.second)
                mono = mono && c.color_of(v) == col;
            if (mono && (!best || cfg.first < *best))
                best = cfg.first;
        }
        const auto got = find_quad_sequences(c, AffineShift{0}, 1);
        REQUIRE(got.has_value() == best.has_value());
        if (got) {
            INFO("trial ", trial);
            // depth 1: every part set is a singleton, so part order is value order
            CHECK(got->solution.values() == *best);
            CHECK(check_solution(p, win, got->solution) == "");
        }
    }
}

TEST_CASE("quad sequences in a constant coloring") {
    const auto win = Window::positive(20);
    const auto q = PatternSpec::parse("quad:t=0:d=2");
    const auto w = find_quad_sequences(Coloring::constant(win, 1), AffineShift{0}, 2);
    REQUIRE(w);
    CHECK(w->solution.values() == std::vector<i64>{1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(check_solution(q, win, w->solution) == "");
    // x = (1,2), w = (2,3), y = z = (1,2) is also admissible.
    auto alt = w->solution;
    alt.assignment[2].second = 2;
    alt.assignment[3].second = 3;
    std::vector<i64> occ;
    for (int part = 0; part < 4; ++part) {
        const auto set = brute::quad_set(part, 0, {alt.assignment[2 * part].second, alt.assignment[2 * part + 1].second});
        occ.insert(occ.end(), set.begin(), set.end());
    }
    alt.occupied = brute::uniq(occ);
    CHECK(alt.occupied == std::vector<i64>{1, 2, 3, 6});
    CHECK(check_solution(q, win, alt) == "");

    // Two blocks: every witness stays inside one of them.
    std::vector<int> blocks(20);
    for (int i = 10; i < 20; ++i)
        blocks[i] = 1;
    const auto b = find_quad_sequences(Coloring(win, 2, blocks), AffineShift{0}, 2);
    REQUIRE(b);
    CHECK(b->solution.occupied.back() <= 10);
}

TEST_CASE("longest arithmetic progression") {
    auto run = ap_longest({1, 2, 3, 5, 7, 9}, 10);
    CHECK(run.length == 5);
    CHECK(run.start == 1);
    CHECK(run.step == 2);
    CHECK(run.terms == std::vector<i64>{1, 3, 5, 7, 9});
    run = ap_longest({4}, 3);
    CHECK(run.length == 1);
    CHECK(run.start == 4);
    run = ap_longest({1, 2, 3, 4, 5, 6}, 4);
    CHECK(run.length == 4);
    CHECK(run.start == 1);
    CHECK(run.step == 1);
    CHECK_THROWS_AS(ap_longest({}, 3), DomainError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<i64> A;
        for (i64 v = 0; v < 40; ++v)
            if (rng() % 3 == 0)
                A.insert(v);
        if (A.empty())
            continue;
        std::size_t best = 0;
        for (i64 a : A)
            for (i64 d = 1; d < 40; ++d) {
                std::size_t len = 0;
                while (A.count(a + static_cast<i64>(len) * d))
                    ++len;
                best = std::max(best, len);
            }
        CHECK(ap_longest(A, 100).length == best);
        CHECK(ap_longest(A, 3).length == std::min<std::size_t>(best, 3));
    }
}
