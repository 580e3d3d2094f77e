#include <catch_amalgamated.hpp>

#include <set>

#include "idp/reduce_cycle.hpp"
#include "idp/reduce_is.hpp"
#include "idp/reduce_sat.hpp"
#include "idp/rng.hpp"
#include "idp/suites.hpp"

using namespace idp;

namespace {
const SolveBudget kBudget{50'000'000, 60.0};
}

TEST_CASE("cycle_to_idp output shape") {
    Graph c6 = realize(Pattern::cycle(6));
    for (int sub : {0, 1, 2}) {
        ReductionArtifact art = cycle_to_idp(c6, 0, 3, sub);
        // |V| - 2 + 16 + sub * (number of gadget edges)
        CHECK(art.instance.graph.vertex_count() == 6 - 2 + 16 + sub * 20);
        CHECK(art.instance.k() == 2);
        for (const auto& [v, role] : art.provenance) {
            CHECK_FALSE(role.empty());
            // every vertex the gadget created has degree at most 3
            if (role.rfind("xgadget:", 0) == 0 || role.rfind("ygadget:", 0) == 0)
                CHECK(art.instance.graph.degree(v) <= 3);
        }
    }
}

TEST_CASE("cycle_to_idp preconditions") {
    Graph c6 = realize(Pattern::cycle(6));
    CHECK_THROWS_WITH(cycle_to_idp(c6, 0, 1, 0), Catch::Matchers::ContainsSubstring("adjacent"));
    Graph star = realize(Pattern::star(3));
    CHECK_THROWS_WITH(cycle_to_idp(star, 0, 1, 0), Catch::Matchers::ContainsSubstring("degree"));
    CHECK_THROWS_AS(cycle_to_idp(c6, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("cycle_to_idp on C6 compiles to a yes instance") {
    Graph c6 = realize(Pattern::cycle(6));
    ReductionArtifact art = cycle_to_idp(c6, 0, 3, 0);
    auto out = solve_exact(art.instance, kBudget);
    REQUIRE(out.status == SolveStatus::Yes);
    CHECK(check_solution(art.instance, *out.solution, false));

    populate_expected_cycle(art, c6, 0, 3, kBudget);
    REQUIRE(art.meta.expected_answer.has_value());
    CHECK(*art.meta.expected_answer == true);
    CHECK(art.meta.answer_provenance == "oracle");
}

TEST_CASE("cycle_to_idp separates disconnected terminals") {
    // two disjoint C4s: x in one, y in the other; no hole through both
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i) edges.emplace_back(i, (i + 1) % 4);
    for (int i = 0; i < 4; ++i) edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    Graph two_c4(8, edges);
    ReductionArtifact art = cycle_to_idp(two_c4, 0, 4, 0);
    CHECK(solve_exact(art.instance, kBudget).status == SolveStatus::No);
    populate_expected_cycle(art, two_c4, 0, 4, kBudget);
    CHECK(*art.meta.expected_answer == false);
}

TEST_CASE("cycle_to_idp answers are invariant under subdivisions") {
    SuiteReport rep = suite_hole(4242, 12, kBudget); // 12 graphs x 3 subdivision counts
    INFO((rep.failures.empty() ? std::string{} : rep.failures.front()));
    CHECK(rep.ok());
    CHECK(rep.total == 36);
}

TEST_CASE("sat graph structure") {
    CnfFormula phi{3, {{Literal{0, true}, Literal{1, true}, Literal{2, true}}}};
    satgadget::SatGraph sg = satgadget::build_sat_graph(phi, 1);
    CHECK(sg.graph.degree(sg.x) == 2);
    CHECK(sg.graph.degree(sg.y) == 2);
    CHECK(sg.lits.size() == 3);
    CHECK(sg.clauses.size() == 1);
    CHECK(sg.vars.size() == 3);
    // contacts: one positive occurrence per variable, wired on the bottom rail
    for (int v = 0; v < 3; ++v) {
        int wired = 0;
        for (int occ : sg.vars[v].bot_occ)
            if (occ >= 0) ++wired;
        CHECK(wired == 1);
        for (int occ : sg.vars[v].top_occ) CHECK(occ == -1);
    }
    CHECK(sg.graph.invariants_hold());
}

TEST_CASE("witness_from_assignment verifies the selected hole") {
    CnfFormula phi{3, {{Literal{0, true}, Literal{1, true}, Literal{2, true}}}};
    for (int ell : {1, 2}) {
        auto set = witness_from_assignment(phi, ell, {true, true, true});
        satgadget::SatGraph sg = satgadget::build_sat_graph(phi, ell);
        // by construction the builder throws unless every vertex has
        // exactly two chosen neighbors; double-check independently
        std::set<Vertex> chosen(set.begin(), set.end());
        for (Vertex v : set) {
            int deg = 0;
            for (Vertex w : sg.graph.neighbors(v)) deg += chosen.count(w);
            REQUIRE(deg == 2);
        }
        CHECK(chosen.count(sg.x) == 1);
        CHECK(chosen.count(sg.y) == 1);
    }

    CHECK_THROWS_WITH(witness_from_assignment(phi, 1, {false, false, false}),
                      Catch::Matchers::ContainsSubstring("does not satisfy"));
}

TEST_CASE("witness picks the chosen clause branch") {
    // third literal satisfied only: branch 3 vertices in, c12 vertices out
    CnfFormula phi{3, {{Literal{0, true}, Literal{1, true}, Literal{2, true}}}};
    auto set = witness_from_assignment(phi, 1, {false, false, true});
    satgadget::SatGraph sg = satgadget::build_sat_graph(phi, 1);
    std::set<Vertex> chosen(set.begin(), set.end());
    CHECK(chosen.count(sg.clauses[0].c3p) == 1);
    CHECK(chosen.count(sg.clauses[0].c3m) == 1);
    CHECK(chosen.count(sg.clauses[0].c12p) == 0);
    CHECK(chosen.count(sg.clauses[0].c12m) == 0);
}

TEST_CASE("sat_to_idp certifies freeness and the hole matches satisfiability") {
    CnfFormula sat_phi{3, {{Literal{0, true}, Literal{1, true}, Literal{2, true}}}};
    CnfFormula unsat_phi{1,
                         {{Literal{0, true}, Literal{0, true}, Literal{0, true}},
                          {Literal{0, false}, Literal{0, false}, Literal{0, false}}}};
    for (int ell : {1, 2}) {
        for (const CnfFormula* phi : {&sat_phi, &unsat_phi}) {
            ReductionArtifact art = sat_to_idp(*phi, ell);
            CHECK(is_h_free(art.instance.graph, Pattern::cycle(6)));
            for (int i = 1; i <= ell; ++i)
                CHECK(is_h_free(art.instance.graph, Pattern::h_graph(i)));
            satgadget::SatGraph sg = satgadget::build_sat_graph(*phi, ell);
            HoleResult hole = find_hole_through(sg.graph, sg.x, sg.y, kBudget);
            REQUIRE(hole.status != HoleStatus::BudgetExhausted);
            CHECK((hole.status == HoleStatus::Found) == sat_solve(*phi).has_value());

            populate_expected_sat(art, *phi, ell);
            REQUIRE(art.meta.expected_answer.has_value());
            CHECK(*art.meta.expected_answer == sat_solve(*phi).has_value());
            CHECK(art.meta.answer_provenance ==
                  (sat_solve(*phi).has_value() ? "witness" : "oracle"));
        }
    }
}

TEST_CASE("smallest sat compilation solves to the right answer end to end") {
    CnfFormula phi{3, {{Literal{0, true}, Literal{1, true}, Literal{2, true}}}};
    ReductionArtifact art = sat_to_idp(phi, 1);
    auto out = solve_exact(art.instance, kBudget);
    REQUIRE(out.status == SolveStatus::Yes);
    CHECK(check_solution(art.instance, *out.solution, false));
}

TEST_CASE("occurrence overflow is a documented error") {
    // nine same-sign occurrences of one variable need more than 2m contacts
    CnfFormula phi{1,
                   {{Literal{0, true}, Literal{0, true}, Literal{0, true}},
                    {Literal{0, true}, Literal{0, true}, Literal{0, true}},
                    {Literal{0, true}, Literal{0, true}, Literal{0, true}}}};
    CHECK_THROWS_WITH(satgadget::build_sat_graph(phi, 1),
                      Catch::Matchers::ContainsSubstring("rail contacts"));
}

TEST_CASE("is_to_idp structure and counts") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    int n = 4, k = 2, m = 3;
    ReductionArtifact art = is_to_idp(g, k);
    // 2 copies of (k diamonds of n + k+1 hubs) + 1 bridge vertex
    CHECK(art.instance.graph.vertex_count() == 2 * (k * n + k + 1) + 1);
    const auto& counts = art.meta.edge_class_counts;
    CHECK(counts.at("consistency") == k * n * (n - 1));
    CHECK(counts.at("independence") == 4 * k * (k - 1) * m);
    CHECK(counts.at("set") == 2 * k * (k - 1) * n);
    CHECK(counts.at("set_ordered_tally") == 4 * k * (k - 1) * n);
    CHECK(longest_induced_path_at_most(art.instance.graph, 4 * k + 4));
}

TEST_CASE("is_to_idp answers match the independent set oracle") {
    Graph k3 = realize(Pattern::cycle(3));
    ReductionArtifact no_art = is_to_idp(k3, 2);
    CHECK(solve_exact(no_art.instance, kBudget).status == SolveStatus::No);
    populate_expected_is(no_art, k3, 2);
    CHECK(*no_art.meta.expected_answer == false);

    Graph e3(3, {});
    ReductionArtifact yes_art = is_to_idp(e3, 2);
    auto out = solve_exact(yes_art.instance, kBudget);
    REQUIRE(out.status == SolveStatus::Yes);
    CHECK(check_solution(yes_art.instance, *out.solution, false));
    populate_expected_is(yes_art, e3, 2);
    CHECK(*yes_art.meta.expected_answer == true);
}

TEST_CASE("is round trip on random graphs") {
    SuiteReport rep = suite_is(31415, 40, kBudget);
    INFO((rep.failures.empty() ? std::string{} : rep.failures.front()));
    CHECK(rep.ok());
    CHECK(rep.agree == 40);
}

TEST_CASE("reduction artifacts serialize through the sidecar") {
    Graph c6 = realize(Pattern::cycle(6));
    ReductionArtifact art = cycle_to_idp(c6, 0, 3, 1);
    populate_expected_cycle(art, c6, 0, 3, kBudget);
    auto j = sidecar_to_json(art);
    ReductionArtifact back = sidecar_from_json(j, art.instance);
    CHECK(back.provenance == art.provenance);
    CHECK(back.meta.source_digest == art.meta.source_digest);
    CHECK(back.meta.expected_answer == art.meta.expected_answer);
    CHECK(back.meta.params == art.meta.params);
    CHECK(sidecar_to_json(back).dump() == j.dump());
}
