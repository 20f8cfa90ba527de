#include <random>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "symramsey/error.hpp"
#include "symramsey/solutions.hpp"

using namespace symramsey;
using i64 = std::int64_t;

namespace {

const std::vector<std::string> kCatalog = {
    "ap:1", "ap:3", "ap:4", "poly:d,d^2", "poly:d^2", "poly:2*d", "schur:add", "schur:add:distinct",
    "schur:mul", "schur:star:1,1", "schur:star:1,-1", "schur:star:2,3", "schur:star:3,4:distinct", "moreira",
    "blm", "sigma:t=0:d=2", "sigma:t=1:d=3", "sigma:t=-2:d=2", "glue:poly=d^2:star=1,1",
    "glue:poly=d:star=1,-1", "glue:poly=2*d:star=2,3", "glue:poly=d:star=1,1:allow-equal",
    "glue:mean:star=1,1", "glue:mean:star=1,1:distinct", "glue:mean:star=3,-2",
};

std::set<brute::Config> engine_configs(const PatternSpec& p, Window w) {
    std::set<brute::Config> out;
    for (const auto& s : enumerate_solutions(p, w))
        out.insert({s.values(), s.occupied});
    return out;
}

void check_complete(const std::string& name, Window w) {
    INFO(name, " on ", w.to_string());
    const auto p = PatternSpec::parse(name);
    const auto sols = enumerate_solutions(p, w);
    for (std::size_t i = 1; i < sols.size(); ++i)
        CHECK_FALSE(solution_less(sols[i], sols[i - 1]));
    for (const auto& s : sols)
        CHECK(check_solution(p, w, s) == "");
    const auto b = brute::configs(p, w);
    const std::set<brute::Config> want(b.begin(), b.end());
    CHECK(want.size() == b.size());
    CHECK(engine_configs(p, w) == want);
    CHECK(sols.size() == want.size());
}

} // namespace

TEST_CASE("catalog names round-trip") {
    for (const auto& n : kCatalog) {
        const auto p = PatternSpec::parse(n);
        CHECK(p.name() == n);
        CHECK(PatternSpec::parse(p.name()) == p);
    }
    CHECK(PatternSpec::parse("glue:poly=d^2:star=1,1:n=2").name() == "glue:poly=d^2:star=1,1");
    CHECK(PatternSpec::parse("mixed:t=1:d=1:ap:3").name() == "mixed:t=1:d=1:ap:3");
    CHECK(PatternSpec::parse("quad:t=0:d=2").name() == "quad:t=0:d=2");
}

TEST_CASE("random pattern names round-trip") {
    std::mt19937_64 rng(7);
    auto pick = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
    auto poly = [&] {
        std::string s;
        const int terms = static_cast<int>(pick(1, 3));
        for (int i = 0; i < terms; ++i) {
            const i64 c = pick(-4, 4);
            if (c == 0)
                continue;
            s += (c < 0 ? "-" : (s.empty() ? "" : "+")) + std::to_string(std::abs(c)) + "*d^" + std::to_string(pick(1, 4));
        }
        return s.empty() ? std::string("d") : s;
    };
    for (int iter = 0; iter < 500; ++iter) {
        std::string name;
        switch (pick(0, 6)) {
        case 0: name = "ap:" + std::to_string(pick(1, 9)); break;
        case 1: name = "poly:" + poly() + "," + poly(); break;
        case 2: name = "sigma:t=" + std::to_string(pick(-5, 5)) + ":d=" + std::to_string(pick(1, 4)); break;
        case 3: {
            const i64 l = pick(1, 4), k = 1 + l * pick(-2, 2);
            name = "glue:poly=" + poly() + ":star=" + std::to_string(l) + "," + std::to_string(k) +
                   ":n=" + std::to_string(pick(1, 4));
            break;
        }
        case 4: name = "glue:system=" + poly() + "," + poly() + ":star=1,1"; break;
        case 5: name = "mixed:t=" + std::to_string(pick(-3, 3)) + ":d=" + std::to_string(pick(1, 2)) + ":ap:3"; break;
        default: name = "quad:t=" + std::to_string(pick(-3, 3)) + ":d=" + std::to_string(pick(1, 2)); break;
        }
        INFO(name);
        PatternSpec p;
        try {
            p = PatternSpec::parse(name);
        } catch (const ValidationError&) {
            continue; // e.g. polynomial that cancels to zero
        }
        const auto canon = p.name();
        CHECK(PatternSpec::parse(canon).name() == canon);
        CHECK(PatternSpec::parse(canon) == p);
    }
}

TEST_CASE("invalid names are rejected") {
    for (const char* bad : {"", "ap:0", "ap:x", "nonsense", "poly:", "poly:d^2+1", "glue:poly=d^2+1:star=1,1",
                            "glue:poly=d:star=2,2", "schur:star:3,2", "schur:star:0,1", "sigma:t=0:d=0",
                            "mixed:t=0:d=3:ap:3", "mixed:t=0:d=1:quad:t=0:d=1", "quad:t=0:d=3", "glue:mean:star=1,1:n=0"}) {
        INFO(bad);
        CHECK_THROWS_AS(PatternSpec::parse(bad), ValidationError);
    }
}

TEST_CASE("worked examples") {
    auto has = [](const std::vector<SolutionTuple>& sols, std::vector<i64> values) {
        for (const auto& s : sols)
            if (s.values() == values)
                return true;
        return false;
    };
    // x + (y-x)^2 = z (*) w with (x, y, z, w) = (1, 3, 1, 2): 5 = 1 + 2 + 1*2
    const auto glue = enumerate_solutions(PatternSpec::parse("glue:poly=d^2:star=1,1"), Window::make(1, 10));
    CHECK(has(glue, {1, 3, 1, 2}));

    const auto ap = enumerate_solutions(PatternSpec::parse("ap:3"), Window::make(1, 3));
    REQUIRE(ap.size() == 1);
    CHECK(ap[0].occupied == std::vector<i64>{1, 2, 3});

    // (4 + 6) / 2 = 5 = 1 (*) 2
    const auto mean = enumerate_solutions(PatternSpec::parse("glue:mean:star=1,1"), Window::make(1, 10));
    CHECK(has(mean, {4, 6, 1, 2}));

    const auto fs = enumerate_solutions(PatternSpec::parse("sigma:t=0:d=2"), Window::make(1, 12));
    CHECK(has(fs, {2, 3}));
}

TEST_CASE("enumeration matches nested loops on small windows") {
    for (const auto& n : kCatalog) {
        check_complete(n, Window::make(1, 14));
        check_complete(n, Window::make(-6, 8));
    }
    check_complete("glue:poly=d^2:star=1,1:n=3", Window::make(-3, 8));
    check_complete("glue:system=d,d^2:star=1,1", Window::make(-2, 7));
    check_complete("glue:system=d:star=1,-1:n=1", Window::make(1, 20));
    check_complete("ap:5", Window::make(1, 30));
    check_complete("poly:d^2,2*d^2", Window::make(1, 30));
    check_complete("mixed:t=0:d=1:ap:3", Window::make(1, 30));
    check_complete("mixed:t=1:d=1:schur:add", Window::make(-4, 20));
    check_complete("mixed:t=0:d=2:ap:2", Window::make(1, 20));
    check_complete("quad:t=0:d=1", Window::make(1, 12));
    check_complete("quad:t=1:d=1", Window::make(-3, 8));
    check_complete("quad:t=0:d=2", Window::make(1, 7));
}

TEST_CASE("glue solution count equals divisor-pair count") {
    // For l = k = 1 the (z, w) completions of (x, y) are the ordered
    // factorisations v + 1 = (z + 1)(w + 1) with z, w in the window.
    const auto p = PatternSpec::parse("glue:poly=d:star=1,1");
    const auto w = Window::make(-5, 25);
    std::map<std::pair<i64, i64>, int> got;
    for (const auto& s : enumerate_solutions(p, w))
        ++got[{s.value("x"), s.value("y")}];
    for (i64 x = w.lo; x <= w.hi; ++x)
        for (i64 y = w.lo; y <= w.hi; ++y) {
            if (x == y)
                continue;
            const i64 v = y; // x + (y - x)
            int want = 0;
            for (i64 z = w.lo; z <= w.hi; ++z)
                for (i64 u = w.lo; u <= w.hi; ++u)
                    want += v + 1 != 0 && (z + 1) * (u + 1) == v + 1;
            const auto it = got.find({x, y});
            CHECK((it == got.end() ? 0 : it->second) == want);
        }
}

TEST_CASE("validator rejects corrupted tuples") {
    for (const auto& n : kCatalog) {
        INFO(n);
        const auto p = PatternSpec::parse(n);
        const auto w = Window::make(1, 14);
        const auto sols = enumerate_solutions(p, w, 5);
        const auto b = brute::configs(p, w);
        const std::set<brute::Config> valid(b.begin(), b.end());
        for (auto s : sols) {
            s.assignment.back().second += 1;
            if (!valid.count({s.values(), s.occupied}))
                CHECK(check_solution(p, w, s) != "");
        }
    }
    const auto p = PatternSpec::parse("ap:3");
    auto s = enumerate_solutions(p, Window::make(1, 3)).front();
    CHECK(check_solution(p, Window::make(2, 3), s) != "");
    s.occupied.push_back(4);
    CHECK(check_solution(p, Window::make(1, 9), s) != "");
}

TEST_CASE("limit truncates the ordered enumeration") {
    const auto p = PatternSpec::parse("schur:add");
    const auto w = Window::make(1, 20);
    const auto all = enumerate_solutions(p, w);
    const auto few = enumerate_solutions(p, w, 4);
    REQUIRE(few.size() == 4);
    CHECK(std::equal(few.begin(), few.end(), all.begin()));
    CHECK(enumerate_solutions(PatternSpec::parse("quad:t=0:d=1"), Window::make(1, 12), 3).size() == 3);
}

TEST_CASE("overflow is reported with context") {
    const auto p = PatternSpec::parse("moreira");
    const auto w = Window::make(INT64_MAX - 4, INT64_MAX);
    CHECK_THROWS_AS(enumerate_solutions(p, w), OverflowError);
    try {
        enumerate_solutions(p, w);
    } catch (const OverflowError& e) {
        CHECK(std::string(e.what()).find("moreira") != std::string::npos);
    }
}
