#include <catch_amalgamated.hpp>

#include "idp/rng.hpp"
#include "idp/solve_poly.hpp"
#include "idp/suites.hpp"

using namespace idp;

namespace {

const SolveBudget kBudget{10'000'000, 60.0};

SolverHandle exact_handle() {
    return [](const IdpInstance& s, const SolveBudget& b) { return solve_exact(s, b); };
}

} // namespace

TEST_CASE("solve_peel rejects a non-forest parameter") {
    IdpInstance inst(realize(Pattern::cycle(6)), {{0, 3}});
    CHECK_THROWS_AS(solve_peel(inst, Pattern::cycle(3), exact_handle(), kBudget),
                    std::invalid_argument);
}

TEST_CASE("solve_peel phase split") {
    // f = P1 means r = 1: phase one covers paths on <= 2 vertices
    IdpInstance easy(build_graph(2, {{0, 1}}), {{0, 1}});
    auto out = solve_peel(easy, Pattern::path(1), exact_handle(), kBudget);
    REQUIRE(out.status == SolveStatus::Yes);
    CHECK(out.route.find("short") != std::string::npos);

    // a long path must go through phase two
    IdpInstance longer(realize(Pattern::path(8)), {{0, 7}});
    out = solve_peel(longer, Pattern::path(1), exact_handle(), kBudget);
    REQUIRE(out.status == SolveStatus::Yes);
    CHECK(check_solution(longer, *out.solution, false));
    CHECK(out.route.find("short") == std::string::npos);

    // isolated source answers no quickly
    IdpInstance isolated(Graph(4, {{1, 2}, {2, 3}}), {{0, 3}});
    out = solve_peel(isolated, Pattern::path(3), exact_handle(), kBudget);
    CHECK(out.status == SolveStatus::No);
    CHECK(out.stats.nodes < 50);
}

TEST_CASE("solve_peel agrees with solve_exact on random instances") {
    SuiteReport rep = suite_peel(2025, 60, kBudget);
    INFO((rep.failures.empty() ? std::string{} : rep.failures.front()));
    CHECK(rep.ok());
    CHECK(rep.agree == 60);
}

TEST_CASE("solve_chair_free named behaviors") {
    SECTION("pure enumeration when everything is short") {
        // claw-free input: C6 with antipodal pairs
        IdpInstance inst(realize(Pattern::cycle(6)), {{0, 1}, {3, 4}});
        auto out = solve_chair_free(inst, exact_handle(), kBudget);
        REQUIRE(out.status == SolveStatus::Yes);
        CHECK(check_solution(inst, *out.solution, false));
    }
    SECTION("long paths survive the common-neighbor deletion") {
        IdpInstance inst(realize(Pattern::path(9)), {{0, 8}});
        auto out = solve_chair_free(inst, exact_handle(), kBudget);
        REQUIRE(out.status == SolveStatus::Yes);
        CHECK(out.solution->paths[0].size() == 9);
    }
    SECTION("claw inside a terminal component discards the branch") {
        // star on 4 legs of length 2: chair-free? S(2,2,2) contains a chair.
        // use K_{1,3} with each edge subdivided? that is a chair host too.
        // C4 works: claw-free, so the branch logic falls through to the
        // claw-free solver on a cycle.
        IdpInstance inst(realize(Pattern::cycle(4)), {{0, 2}});
        auto out = solve_chair_free(inst, exact_handle(), kBudget);
        CHECK(out.status == SolveStatus::Yes);
    }
}

TEST_CASE("solve_chair_free agrees with solve_exact on chair-free instances") {
    SuiteReport rep = suite_chairfree(99, 60, kBudget);
    INFO((rep.failures.empty() ? std::string{} : rep.failures.front()));
    CHECK(rep.ok());
    CHECK(rep.agree == 60);
}

TEST_CASE("solve_dispatch routes per the classifier") {
    // chair-free instance routed to the branching algorithm
    IdpInstance c6(realize(Pattern::cycle(6)), {{0, 1}, {3, 4}});
    auto out = solve_dispatch(c6, Pattern::chair(), kBudget);
    CHECK(out.status == SolveStatus::Yes);
    CHECK(out.route == "chair-free(exact)");

    out = solve_dispatch(c6, parse_pattern("P3+chair"), kBudget);
    CHECK(out.status == SolveStatus::Yes);
    CHECK(out.route == "peel(P3)+chair-free(exact)");

    out = solve_dispatch(c6, Pattern::cycle(6), kBudget);
    CHECK(out.status == SolveStatus::Yes);
    CHECK(out.route.rfind("exact[", 0) == 0);

    // pure linear forest also goes through the peel pipeline
    out = solve_dispatch(c6, parse_pattern("P4"), kBudget);
    CHECK(out.status == SolveStatus::Yes);
    CHECK(out.route == "peel(P4)+chair-free(exact)");
}

TEST_CASE("polynomial pipelines find planted solutions") {
    Rng rng(808);
    int peel_yes = 0, chair_yes = 0;
    for (int trial = 0; trial < 80; ++trial) {
        // two disjoint paths, extra vertices wired to at most one side
        int la = rng.uniform_int(2, 8), lb = rng.uniform_int(2, 4);
        int extra = rng.uniform_int(0, 2);
        int n = la + lb + extra;
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < la; ++i) edges.emplace_back(i, i + 1);
        for (int i = 0; i + 1 < lb; ++i) edges.emplace_back(la + i, la + i + 1);
        for (int e = la + lb; e < n; ++e)
            for (int v = 0; v < la; ++v)
                if (rng.bernoulli(0.25)) edges.emplace_back(v, e);
        Graph g(n, edges);
        IdpInstance inst(g, {{0, la - 1}, {la, la + lb - 1}});

        auto peel = solve_peel(inst, Pattern::path(3), exact_handle(), kBudget);
        REQUIRE(peel.status == SolveStatus::Yes);
        CHECK(check_solution(inst, *peel.solution, false));
        if (la >= 8) ++peel_yes; // needed phase two

        if (is_h_free(g, Pattern::chair())) {
            auto chair = solve_chair_free(inst, exact_handle(), kBudget);
            REQUIRE(chair.status == SolveStatus::Yes);
            CHECK(check_solution(inst, *chair.solution, false));
            if (la >= 8) ++chair_yes; // the long-path branch did the work
        }
    }
    CHECK(peel_yes > 3);
    CHECK(chair_yes > 3);
}

TEST_CASE("dispatch answers stay exact across routes") {
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(4, 9);
        Graph g = random_graph(rng, n, rng.uniform_int(15, 50) / 100.0);
        IdpInstance inst(g, {{0, 1}, {2, 3}});
        auto exact = solve_exact(inst, kBudget);
        REQUIRE(exact.status != SolveStatus::BudgetExhausted);
        // dispatch may only be run on instances that really avoid h; filter
        for (const Pattern& h : {Pattern::chair(), parse_pattern("P3+chair"), parse_pattern("P5")}) {
            if (!is_h_free(g, h)) continue;
            auto routed = solve_dispatch(inst, h, kBudget);
            REQUIRE(routed.status != SolveStatus::BudgetExhausted);
            CHECK(routed.status == exact.status);
        }
    }
}
