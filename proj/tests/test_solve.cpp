#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "idp/independent_set.hpp"
#include "idp/pattern.hpp"
#include "idp/rng.hpp"
#include "idp/sat.hpp"
#include "idp/solve.hpp"
#include "support/oracles.hpp"

using namespace idp;

namespace {

const SolveBudget kBudget{10'000'000, 30.0};

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Reference decision procedure: enumerate all tuples of vertex-disjoint
// paths by brute force over vertex subsets and permutations. Only usable
// for tiny instances; deliberately structured nothing like the solver.
bool brute_force_idp(const IdpInstance& inst, bool flexible = false) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    const int k = inst.k();
    // assignment of each vertex to a path id (or none), then check each
    // class forms one path with the right endpoints
    std::vector<int> owner(n, -1);
    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == n) {
            std::vector<std::vector<Vertex>> classes(k);
            for (Vertex u = 0; u < n; ++u)
                if (owner[u] >= 0) classes[owner[u]].push_back(u);
            IdpSolution sol;
            for (int i = 0; i < k; ++i) {
                auto& verts = classes[i];
                // order class i into an s-t path by walking adjacency
                Vertex s = inst.pairs[i].s, t = inst.pairs[i].t;
                if (verts.empty()) return false;
                std::vector<char> used(n, 0);
                std::vector<Vertex> path{s};
                bool on_class_s = false, on_class_t = false;
                for (Vertex u : verts) {
                    if (u == s) on_class_s = true;
                    if (u == t) on_class_t = true;
                }
                if (!on_class_s || !on_class_t) return false;
                used[s] = 1;
                while (path.back() != t) {
                    Vertex cur = path.back();
                    Vertex next = -1;
                    for (Vertex u : verts)
                        if (!used[u] && g.adjacent(cur, u)) {
                            if (next != -1) return false; // branching, not a path
                            next = u;
                        }
                    if (next < 0) return false;
                    used[next] = 1;
                    path.push_back(next);
                }
                if (path.size() != verts.size()) return false;
                sol.paths.push_back(path);
            }
            return check_solution(inst, sol, flexible);
        }
        for (int c = -1; c < k; ++c) {
            owner[v] = c;
            if (assign(v + 1)) return true;
        }
        owner[v] = -1;
        return false;
    };
    return assign(0);
}

} // namespace

TEST_CASE("check_solution strict and flexible") {
    Graph c6 = realize(Pattern::cycle(6));
    IdpInstance on_c6(c6, {{0, 1}, {3, 4}});
    CHECK(check_solution(on_c6, IdpSolution{{{0, 1}, {3, 4}}}, false));

    Graph p4 = realize(Pattern::path(4));
    IdpInstance on_p4(p4, {{0, 1}, {2, 3}});
    IdpSolution sol{{{0, 1}, {2, 3}}};
    CHECK_FALSE(check_solution(on_p4, sol, false)); // edge 1-2 joins the paths
    CHECK(check_solution(on_p4, sol, true));        // endpoints only: exempt

    // endpoint-endpoint contact is exempt, endpoint-interior is not
    Graph p5 = realize(Pattern::path(5));
    IdpInstance on_p5(p5, {{0, 2}, {3, 4}});
    IdpSolution mid{{{0, 1, 2}, {3, 4}}};
    CHECK_FALSE(check_solution(on_p5, mid, false));
    CHECK(check_solution(on_p5, mid, true)); // only cross edge is 2-3, both endpoints
    IdpInstance on_p5b(p5, {{0, 2}, {4, 3}});
    IdpSolution interior{{{0, 1, 2}, {4, 3}}};
    CHECK(check_solution(on_p5b, interior, true));
    Graph fan = build_graph(5, {{0, 1}, {1, 2}, {3, 4}, {1, 3}});
    IdpInstance on_fan(fan, {{0, 2}, {3, 4}});
    IdpSolution fan_sol{{{0, 1, 2}, {3, 4}}};
    CHECK_FALSE(check_solution(on_fan, fan_sol, true)); // 1 is interior, 1-3 not exempt

    // repeated vertex inside a path
    Graph c4 = realize(Pattern::cycle(4));
    IdpInstance on_c4(c4, {{0, 2}});
    CHECK_FALSE(check_solution(on_c4, IdpSolution{{{0, 1, 0, 3, 2}}}, false));

    // structural errors throw, distinctly from a false verdict
    CHECK_THROWS_WITH(check_solution(on_c4, IdpSolution{{{0, 1}}}, false),
                      Catch::Matchers::ContainsSubstring("endpoint mismatch"));
    CHECK_THROWS_WITH(check_solution(on_c4, IdpSolution{{}}, false),
                      Catch::Matchers::ContainsSubstring("path count"));
    CHECK_THROWS_WITH(check_solution(on_c4, IdpSolution{{{0, 9, 2}}}, false),
                      Catch::Matchers::ContainsSubstring("out of range"));
}

TEST_CASE("solve_exact on named instances") {
    SECTION("single pair on an edge") {
        IdpInstance inst(build_graph(2, {{0, 1}}), {{0, 1}});
        auto out = solve_exact(inst, kBudget);
        REQUIRE(out.status == SolveStatus::Yes);
        CHECK(out.solution->paths[0] == std::vector<Vertex>{0, 1});
    }
    SECTION("two pairs on K4 are impossible") {
        IdpInstance inst(complete_graph(4), {{0, 1}, {2, 3}});
        CHECK(solve_exact(inst, kBudget).status == SolveStatus::No);
    }
    SECTION("antipodal pairs on C6") {
        IdpInstance inst(realize(Pattern::cycle(6)), {{0, 1}, {3, 4}});
        auto out = solve_exact(inst, kBudget);
        REQUIRE(out.status == SolveStatus::Yes);
        CHECK(check_solution(inst, *out.solution, false));
    }
    SECTION("isolated source answers no quickly") {
        Graph g(4, {{1, 2}, {2, 3}});
        IdpInstance inst(g, {{0, 3}});
        auto out = solve_exact(inst, kBudget);
        CHECK(out.status == SolveStatus::No);
        CHECK(out.stats.nodes < 10);
    }
    SECTION("node budget exhaustion is reported, not mistaken for no") {
        IdpInstance inst(realize(Pattern::cycle(30)), {{0, 15}});
        auto out = solve_exact(inst, SolveBudget{5, 30.0});
        CHECK(out.status == SolveStatus::BudgetExhausted);
    }
}

// Random instances are mostly no; planting two cross-edge-free paths gives
// guaranteed yes cases so both answers are exercised.
IdpInstance planted_yes_instance(Rng& rng) {
    int la = rng.uniform_int(2, 3), lb = rng.uniform_int(2, 3);
    int extra = rng.uniform_int(0, 2);
    int n = la + lb + extra;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < la; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i + 1 < lb; ++i) edges.emplace_back(la + i, la + i + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool a_side = u < la && v < la;
            bool b_side = u >= la && u < la + lb && v >= la && v < la + lb;
            bool cross = (u < la) != (v < la) && v < la + lb;
            if (cross || a_side || b_side) continue; // keep the plant intact
            if (rng.bernoulli(0.3)) edges.emplace_back(u, v);
        }
    Graph g(n, edges);
    return IdpInstance(g, {{0, la - 1}, {la, la + lb - 1}});
}

TEST_CASE("solve_exact agrees with the assignment brute force") {
    Rng rng(1234);
    int yes_seen = 0, no_seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
        IdpInstance inst =
            trial % 2 ? planted_yes_instance(rng)
                      : IdpInstance(random_graph(rng, rng.uniform_int(4, 7),
                                                 rng.uniform_int(20, 60) / 100.0),
                                    {{0, 1}, {2, 3}});
        auto out = solve_exact(inst, kBudget);
        REQUIRE(out.status != SolveStatus::BudgetExhausted);
        bool expected = brute_force_idp(inst);
        CHECK((out.status == SolveStatus::Yes) == expected);
        if (expected)
            ++yes_seen;
        else
            ++no_seen;
        if (out.solution) CHECK(check_solution(inst, *out.solution, false));
    }
    CHECK(yes_seen > 30);
    CHECK(no_seen > 30);
}

TEST_CASE("find_hole_through basics") {
    Graph c6 = realize(Pattern::cycle(6));
    for (Vertex y : {1, 2, 3}) {
        auto res = find_hole_through(c6, 0, y, kBudget);
        REQUIRE(res.status == HoleStatus::Found);
        CHECK(res.cycle.size() == 6);
        CHECK(verify_hole(c6, res.cycle, 0, y));
    }
    CHECK(find_hole_through(complete_graph(4), 0, 2, kBudget).status == HoleStatus::None);
    CHECK_THROWS_AS(find_hole_through(c6, 2, 2, kBudget), std::invalid_argument);

    // triangle is not a hole
    CHECK(find_hole_through(realize(Pattern::cycle(3)), 0, 1, kBudget).status == HoleStatus::None);

    // adjacent x,y lie on the 4-cycle
    Graph c4 = realize(Pattern::cycle(4));
    auto res = find_hole_through(c4, 0, 1, kBudget);
    REQUIRE(res.status == HoleStatus::Found);
    CHECK(verify_hole(c4, res.cycle, 0, 1));
}

TEST_CASE("find_hole_through agrees with cycle enumeration") {
    Rng rng(555);
    // subset enumeration: a hole through x,y is a connected vertex set of
    // size >= 4 containing both where everyone has exactly two set-neighbors
    auto brute_hole = [](const Graph& g, Vertex x, Vertex y) {
        int n = g.vertex_count();
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (!(mask & (1 << x)) || !(mask & (1 << y))) continue;
            std::vector<Vertex> verts;
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) verts.push_back(v);
            if (verts.size() < 4) continue;
            bool cycle = true;
            for (Vertex v : verts) {
                int deg = 0;
                for (Vertex w : verts)
                    if (v != w && g.adjacent(v, w)) ++deg;
                if (deg != 2) {
                    cycle = false;
                    break;
                }
            }
            if (!cycle) continue;
            // connected?
            std::vector<Vertex> stack{verts[0]};
            std::set<Vertex> seen{verts[0]};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : verts)
                    if (g.adjacent(v, w) && !seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
            if (seen.size() == verts.size()) return true;
        }
        return false;
    };
    int found = 0;
    for (int trial = 0; trial < 140; ++trial) {
        int n = rng.uniform_int(4, 9);
        Graph g = random_graph(rng, n, rng.uniform_int(20, 50) / 100.0);
        Vertex x = 0, y = rng.uniform_int(1, n - 1);
        auto res = find_hole_through(g, x, y, kBudget);
        REQUIRE(res.status != HoleStatus::BudgetExhausted);
        bool expected = brute_hole(g, x, y);
        CHECK((res.status == HoleStatus::Found) == expected);
        if (res.status == HoleStatus::Found) {
            ++found;
            CHECK(verify_hole(g, res.cycle, x, y));
        }
    }
    CHECK(found > 15);
}

TEST_CASE("sat_solve") {
    CnfFormula one{3, {{Literal{0, true}, Literal{1, true}, Literal{2, true}}}};
    CHECK(sat_solve(one).has_value());

    CnfFormula contra{1,
                      {{Literal{0, true}, Literal{0, true}, Literal{0, true}},
                       {Literal{0, false}, Literal{0, false}, Literal{0, false}}}};
    CHECK_FALSE(sat_solve(contra).has_value());

    // random 3-CNF vs. truth-table enumeration
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        CnfFormula f;
        f.n = rng.uniform_int(1, 6);
        int m = rng.uniform_int(1, 8);
        for (int c = 0; c < m; ++c) {
            std::array<Literal, 3> cl;
            for (auto& lit : cl)
                lit = Literal{rng.uniform_int(0, f.n - 1), rng.uniform_int(0, 1) == 1};
            f.clauses.push_back(cl);
        }
        bool expected = false;
        for (int mask = 0; mask < (1 << f.n) && !expected; ++mask) {
            std::vector<bool> a(f.n);
            for (int v = 0; v < f.n; ++v) a[v] = (mask >> v) & 1;
            expected = f.satisfied_by(a);
        }
        auto got = sat_solve(f);
        CHECK(got.has_value() == expected);
        if (got) CHECK(f.satisfied_by(*got));
    }
}

TEST_CASE("dimacs") {
    CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(f.n == 3);
    CHECK(f.m() == 2);
    CHECK(parse_dimacs(to_dimacs(f)).clauses == f.clauses);
    CHECK_THROWS_WITH(parse_dimacs("p cnf 2 1\n1 2 0\n"),
                      Catch::Matchers::ContainsSubstring("exactly 3"));
    CHECK_THROWS_WITH(parse_dimacs("1 2 3 0\n"), Catch::Matchers::ContainsSubstring("problem line"));
}

TEST_CASE("has_independent_set") {
    CHECK_FALSE(has_independent_set(complete_graph(3), 2).has_value());
    auto got = has_independent_set(Graph(2, {}), 2);
    REQUIRE(got.has_value());
    CHECK(*got == std::vector<Vertex>{0, 1});

    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform_int(1, 9);
        Graph g = random_graph(rng, n, rng.uniform_int(20, 70) / 100.0);
        int k = rng.uniform_int(0, n);
        bool expected = false;
        for (int mask = 0; mask < (1 << n) && !expected; ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            bool indep = true;
            for (int u = 0; u < n && indep; ++u)
                for (int v = u + 1; v < n && indep; ++v)
                    if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) indep = false;
            expected = indep;
        }
        auto res = has_independent_set(g, k);
        CHECK(res.has_value() == expected);
        if (res) {
            CHECK(static_cast<int>(res->size()) == k);
            for (size_t i = 0; i < res->size(); ++i)
                for (size_t j = i + 1; j < res->size(); ++j)
                    CHECK_FALSE(g.adjacent((*res)[i], (*res)[j]));
        }
    }
}
