#include "doctest.h"
#include "symramsey/cnf.hpp"
#include "symramsey/error.hpp"
#include "symramsey/match.hpp"
#include "symramsey/search.hpp"

using namespace symramsey;
using i64 = std::int64_t;

namespace {

const std::vector<std::string> kPatterns = {
    "ap:3", "ap:4", "schur:add", "schur:add:distinct", "schur:mul", "schur:star:1,1", "schur:star:1,-1",
    "moreira", "blm", "sigma:t=0:d=2", "poly:d,d^2", "glue:poly=d^2:star=1,1", "glue:mean:star=1,1",
    "glue:poly=d:star=1,-1", "mixed:t=0:d=1:ap:3", "quad:t=0:d=1",
};

/// Satisfiability by enumerating every assignment that gives each integer exactly one color.
std::optional<std::vector<i64>> satisfy_by_enumeration(const CnfDocument& doc) {
    const std::size_t W = doc.window().size();
    std::vector<int> colors(W, 0);
    for (;;) {
        std::vector<i64> lits;
        for (std::size_t i = 0; i < W; ++i)
            for (int c = 0; c < doc.r; ++c) {
                const i64 v = static_cast<i64>(i) * doc.r + c + 1;
                lits.push_back(c == colors[i] ? v : -v);
            }
        bool all = true;
        for (const auto& cl : doc.clauses) {
            bool sat = false;
            for (i64 lit : cl)
                sat = sat || (lit > 0 ? lits[static_cast<std::size_t>(lit - 1)] > 0
                                      : lits[static_cast<std::size_t>(-lit - 1)] < 0);
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all)
            return lits;
        std::size_t i = W;
        while (i > 0 && colors[i - 1] == doc.r - 1)
            colors[--i] = 0;
        if (i == 0)
            return std::nullopt;
        ++colors[i - 1];
    }
}

std::vector<i64> model_of(const Coloring& c) {
    std::vector<i64> lits;
    const auto w = c.window();
    for (i64 i = w.lo; i <= w.hi; ++i)
        for (int col = 0; col < c.colors(); ++col) {
            const i64 v = (i - w.lo) * c.colors() + col + 1;
            lits.push_back(c.color_of(i) == col ? v : -v);
        }
    return lits;
}

} // namespace

TEST_CASE("decide examples") {
    const auto schur = PatternSpec::parse("schur:add");
    auto out = decide(schur, 2, 4);
    REQUIRE(out.avoidable);
    CHECK(out.coloring->classes() == std::vector<std::vector<i64>>{{1, 4}, {2, 3}});
    CHECK(out.stats.max_depth == 4);
    out = decide(schur, 2, 5);
    CHECK_FALSE(out.avoidable);
    CHECK_FALSE(out.coloring);
    CHECK(out.stats.nodes > 0);
    CHECK_FALSE(decide(PatternSpec::parse("ap:3"), 1, 3).avoidable);
    CHECK(decide(PatternSpec::parse("ap:3"), 1, 2).avoidable);
    CHECK_THROWS_AS(decide(schur, 0, 4), ValidationError);
    CHECK_THROWS_AS(decide(schur, 2, 0), ValidationError);
}

TEST_CASE("brute force examples") {
    const auto ap3 = PatternSpec::parse("ap:3");
    const auto b = brute_force_decide(ap3, 2, 8);
    REQUIRE(b.avoidable);
    CHECK(verify_avoiding(ap3, *b.coloring, Domain::positive));
    CHECK_FALSE(brute_force_decide(ap3, 2, 9).avoidable);
    CHECK_FALSE(brute_force_decide(PatternSpec::parse("moreira"), 1, 4).avoidable);
    for (int n = 1; n <= 12; ++n) {
        const auto s = PatternSpec::parse("schur:add");
        const auto d = decide(s, 2, n);
        const auto o = brute_force_decide(s, 2, n);
        CHECK(d.avoidable == o.avoidable);
        CHECK(d.coloring == o.coloring);
    }
    CHECK_THROWS_AS(brute_force_decide(ap3, 2, 30), ResourceError);
}

TEST_CASE("decide agrees with brute force") {
    for (const auto& name : kPatterns) {
        const auto p = PatternSpec::parse(name);
        for (int r : {2, 3})
            for (int n = 1; n <= (r == 2 ? 12 : 8); ++n) {
                INFO(name, " r=", r, " n=", n);
                const auto d = decide(p, r, n);
                const auto o = brute_force_decide(p, r, n);
                REQUIRE(d.avoidable == o.avoidable);
                CHECK(d.coloring == o.coloring);
                if (d.avoidable)
                    CHECK(verify_avoiding(p, *d.coloring, Domain::positive));
            }
    }
}

TEST_CASE("integer domain drops configurations through 0") {
    SearchOptions z;
    z.domain = Domain::z;
    for (const std::string name : {"schur:add", "schur:mul", "ap:3", "schur:star:1,1", "moreira"}) {
        const auto p = PatternSpec::parse(name);
        for (int n = 1; n <= 5; ++n) {
            INFO(name, " n=", n);
            const auto d = decide(p, 2, n, z);
            const auto o = brute_force_decide(p, 2, n, Domain::z);
            REQUIRE(d.avoidable == o.avoidable);
            CHECK(d.coloring == o.coloring);
            if (d.avoidable) {
                CHECK(d.coloring->window() == Window::make(-n, n));
                CHECK(d.coloring->color_of(0) == 0);
            }
        }
    }
    for (const auto& t : detail::domain_tuples(PatternSpec::parse("schur:mul"), Domain::z, 4, 1000))
        CHECK_FALSE(std::binary_search(t.begin(), t.end(), 0));
    CHECK(parse_domain("z") == Domain::z);
    CHECK_THROWS_AS(parse_domain("q"), ValidationError);
}

TEST_CASE("worker count does not change the result") {
    for (const auto& [name, r, n] : std::vector<std::tuple<std::string, int, int>>{
             {"schur:add", 2, 4}, {"schur:add", 2, 5}, {"ap:3", 2, 8}, {"ap:3", 2, 9}, {"ap:3", 3, 20},
             {"schur:add", 3, 13}, {"schur:add", 3, 14}, {"glue:poly=d^2:star=1,1", 2, 14}}) {
        INFO(name, " r=", r, " n=", n);
        const auto p = PatternSpec::parse(name);
        const auto one = decide(p, r, n);
        for (unsigned w : {2u, 3u, 8u}) {
            SearchOptions opt;
            opt.workers = w;
            const auto many = decide(p, r, n, opt);
            CHECK(many.avoidable == one.avoidable);
            CHECK(many.coloring == one.coloring);
            CHECK(many.stats.nodes == one.stats.nodes);
            CHECK(many.stats.max_depth == one.stats.max_depth);
        }
    }
}

TEST_CASE("rado numbers") {
    const auto ap3 = rado_number(PatternSpec::parse("ap:3"), 2, 30);
    REQUIRE(ap3.number);
    CHECK(*ap3.number == 9);
    REQUIRE(ap3.certificate);
    CHECK(ap3.certificate->window() == Window::positive(8));
    CHECK(verify_avoiding(PatternSpec::parse("ap:3"), *ap3.certificate, Domain::positive));
    CHECK(ap3.avoidable_by_n == std::vector<bool>{true, true, true, true, true, true, true, true, false});

    const auto schur = rado_number(PatternSpec::parse("schur:add"), 2, 30);
    REQUIRE(schur.number);
    CHECK(*schur.number == 5);
    const auto ap2 = rado_number(PatternSpec::parse("ap:2"), 2, 10);
    REQUIRE(ap2.number);
    CHECK(*ap2.number == 3);

    const auto capped = rado_number(PatternSpec::parse("ap:3"), 2, 6);
    CHECK_FALSE(capped.number);
    REQUIRE(capped.certificate);
    CHECK(capped.certificate->window() == Window::positive(6));

    // once forced, larger windows stay forced
    for (const auto& [name, n] : std::vector<std::pair<std::string, i64>>{{"ap:3", 9}, {"schur:add", 5}, {"ap:2", 3}})
        for (i64 m = n; m <= n + 4; ++m)
            CHECK_FALSE(decide(PatternSpec::parse(name), 2, m).avoidable);
    CHECK_THROWS_AS(rado_number(PatternSpec::parse("ap:3"), 2, 0), ValidationError);
}

TEST_CASE("tuple memory bound") {
    SearchOptions opt;
    opt.max_tuple_entries = 10;
    CHECK_THROWS_AS(decide(PatternSpec::parse("ap:3"), 2, 20, opt), ResourceError);
}

TEST_CASE("CNF export") {
    const auto schur = PatternSpec::parse("schur:add");
    const auto doc = export_cnf(schur, 2, 3);
    CHECK(doc.num_vars == 6);
    REQUIRE(doc.clauses.size() == 10);
    CHECK(doc.clauses[0] == std::vector<i64>{1, 2});
    CHECK(doc.clauses[1] == std::vector<i64>{-1, -2});
    // {1,2} then {1,2,3}, once per color
    CHECK(doc.clauses[6] == std::vector<i64>{-1, -3});
    CHECK(doc.clauses[7] == std::vector<i64>{-2, -4});
    CHECK(doc.clauses[8] == std::vector<i64>{-1, -3, -5});
    CHECK(doc.clauses[9] == std::vector<i64>{-2, -4, -6});

    const auto text = doc.to_dimacs();
    CHECK(text.rfind("c pattern=schur:add n=3 r=2 map=(i-lo)*r+c+1\n", 0) == 0);
    CHECK(text.find("p cnf 6 10\n") != std::string::npos);
    const auto back = CnfDocument::parse(text);
    CHECK(back.clauses == doc.clauses);
    CHECK(back.pattern == doc.pattern);
    CHECK(back.n == 3);
    CHECK(back.r == 2);

    CHECK_FALSE(satisfy_by_enumeration(export_cnf(PatternSpec::parse("ap:3"), 1, 3)));

    SearchOptions z;
    z.domain = Domain::z;
    const auto zd = export_cnf(schur, 2, 3, z);
    CHECK(zd.num_vars == 14);
    const auto zb = CnfDocument::parse(zd.to_dimacs());
    CHECK(zb.domain == Domain::z);
    CHECK(zb.clauses == zd.clauses);

    CHECK_THROWS_AS(CnfDocument::parse("p cnf 2 1\n1 2 0\n"), ValidationError);
    CHECK_THROWS_AS(CnfDocument::parse("c pattern=ap:3 n=1 r=2 map=(i-lo)*r+c+1\np cnf 2 2\n1 2 0\n"), ValidationError);
}

TEST_CASE("CNF satisfiable exactly when avoidable") {
    for (const auto& name : kPatterns) {
        const auto p = PatternSpec::parse(name);
        for (int r : {1, 2, 3})
            for (int n = 1; n <= (r == 3 ? 6 : 9); ++n) {
                INFO(name, " r=", r, " n=", n);
                const auto doc = export_cnf(p, r, n);
                const auto model = satisfy_by_enumeration(doc);
                REQUIRE(model.has_value() == decide(p, r, n).avoidable);
                if (model) {
                    const auto check = validate_model(doc, *model);
                    CHECK(check.accepted);
                    REQUIRE(check.coloring);
                    CHECK(find_monochromatic(*check.coloring, p) == std::nullopt);
                }
            }
    }
}

TEST_CASE("model validation") {
    const auto schur = PatternSpec::parse("schur:add");
    const auto doc4 = export_cnf(schur, 2, 4);
    const auto good = Coloring::from_classes(Window::positive(4), {{1, 4}, {2, 3}});
    auto lits = model_of(good);
    auto res = validate_model(doc4, lits);
    CHECK(res.accepted);
    CHECK(res.coloring == good);
    lits.push_back(0);
    CHECK(validate_model(doc4, lits).accepted);

    // both colors at 2
    auto both = model_of(good);
    both[2] = 3;
    both[3] = 4;
    res = validate_model(doc4, both);
    CHECK_FALSE(res.accepted);
    REQUIRE(res.violated_clause);
    CHECK(*res.violated_clause == 3);
    CHECK(res.reason.find("at-most-one clause for 2") != std::string::npos);

    // every coloring of [1,5] violates some configuration clause
    const auto doc5 = export_cnf(schur, 2, 5);
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> colors(5);
        for (int i = 0; i < 5; ++i)
            colors[static_cast<std::size_t>(i)] = mask >> i & 1;
        const auto r5 = validate_model(doc5, model_of(Coloring(Window::positive(5), 2, colors)));
        CHECK_FALSE(r5.accepted);
        REQUIRE(r5.violated_clause);
        CHECK(r5.reason.find("configuration") != std::string::npos);
    }

    CHECK_THROWS_AS(validate_model(doc4, {1, -2, 3}), ValidationError);
    CHECK_THROWS_AS(validate_model(doc4, {1, 1, 3, 4, 5, 6, 7, 8}), ValidationError);
    CHECK_THROWS_AS(validate_model(doc4, {1, 2, 3, 4, 5, 6, 7, 9}), ValidationError);

    // a tampered document without configuration clauses is caught by the rescan
    auto stripped = export_cnf(schur, 2, 5);
    stripped.clauses.resize(10);
    const auto all0 = Coloring::constant(Window::positive(5), 2);
    res = validate_model(stripped, model_of(all0));
    CHECK_FALSE(res.accepted);
    CHECK_FALSE(res.violated_clause);

    CHECK(parse_model("s SATISFIABLE\nv 1 -2 3\nv -4 0\n") == std::vector<i64>{1, -2, 3, -4});
    CHECK(parse_model("c comment\n1 -2 0\n") == std::vector<i64>{1, -2});
}

TEST_CASE("search on a shifted window") {
    // x (*)_{1,1} y = (x+1)(y+1) - 1, so i -> i+1 carries these triples onto {x, y, xy}
    for (i64 n = 1; n <= 12; ++n) {
        const auto a = decide(PatternSpec::parse("schur:star:1,1"), 2, n);
        const auto b = decide_window(PatternSpec::parse("schur:mul"), 2, Window::make(2, n + 1));
        REQUIRE(a.avoidable == b.avoidable);
        if (a.avoidable)
            CHECK(a.coloring->table() == b.coloring->table());
    }
}
