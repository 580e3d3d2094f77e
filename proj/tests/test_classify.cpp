#include <catch_amalgamated.hpp>

#include "idp/classify.hpp"
#include "idp/pattern.hpp"
#include "idp/rng.hpp"
#include "support/oracles.hpp"

using namespace idp;

namespace {

// Oracle for the tractable region of the fixed-k theorem: h embeds as a
// subgraph into P_N + chair with N = |V(h)| (a linear forest can always be
// carved out of one long path by dropping edges).
bool embeds_into_forest_plus_chair(const Graph& h) {
    int n = h.vertex_count();
    Pattern host = Pattern::union_of({Pattern::path(std::max(n, 1)), Pattern::chair()});
    return test::brute_force_subgraph(realize(host), h);
}

// Oracle for membership in S: every component is a path or a subdivided
// claw, checked by brute-force isomorphism against the realizations.
bool component_in_S(const Graph& comp) {
    int n = comp.vertex_count();
    if (test::brute_force_induced(realize(Pattern::path(n)), comp) &&
        comp.edge_count() == n - 1)
        return true; // spanning induced subgraph of P_n with n-1 edges = P_n
    for (int a = 1; a <= n; ++a)
        for (int b = a; a + b <= n; ++b) {
            int c = n - 1 - a - b;
            if (c < b) continue;
            Graph s = realize(Pattern::subdivided_claw(a, b, c));
            if (comp.edge_count() == s.edge_count() && test::brute_force_induced(s, comp))
                return true;
        }
    return false;
}

bool in_S_oracle(const Graph& h) {
    for (const auto& verts : detail::components(h))
        if (!component_in_S(induced_subgraph(h, verts).graph)) return false;
    return true;
}

// Oracle for the variable-k tractable region: h induced-embeds into
// sP3 + P6 with s = number of components.
bool embeds_into_sP3_P6(const Graph& h) {
    int s = static_cast<int>(detail::components(h).size());
    std::vector<Pattern> parts(std::max(s, 1), Pattern::path(3));
    parts.push_back(Pattern::path(6));
    return test::brute_force_induced(realize(Pattern::union_of(parts)), h);
}

Verdict fixed_k(const std::string& pattern) {
    return classify_fixed_k(realize(parse_pattern(pattern))).verdict;
}

Verdict variable_k(const std::string& pattern) {
    return classify_variable_k(realize(parse_pattern(pattern))).verdict;
}

} // namespace

TEST_CASE("fixed-k classifier truth table") {
    for (const char* s : {"chair", "claw", "P1", "P5", "P10", "P5+chair", "P3+P4", "P2+claw"})
        CHECK(fixed_k(s) == Verdict::PolynomialTime);
    for (const char* s : {"C3", "C4", "C5", "C6", "C7", "C8", "K1,4", "H1", "H2", "H3", "H1+P2"})
        CHECK(fixed_k(s) == Verdict::NpComplete);
    for (const char* s : {"S1,1,3", "S2,2,2", "2K1,3", "2S1,1,2", "claw+chair"})
        CHECK(fixed_k(s) == Verdict::Open);
}

TEST_CASE("fixed-k reasons are machine readable") {
    CHECK(classify_fixed_k(realize(parse_pattern("C6"))).reason == "has-cycle");
    CHECK(classify_fixed_k(realize(parse_pattern("K1,4"))).reason == "max-degree-at-least-4");
    CHECK(classify_fixed_k(realize(parse_pattern("H2"))).reason == "two-degree-3-in-component");
    CHECK(classify_fixed_k(realize(parse_pattern("P4"))).reason == "linear-forest");
    CHECK(classify_fixed_k(realize(parse_pattern("P3+chair"))).reason ==
          "subgraph-of-linear-forest-plus-chair");
    CHECK(classify_fixed_k(realize(parse_pattern("S1,1,3"))).reason == "in-S-beyond-chair");
}

TEST_CASE("variable-k classifier truth table") {
    for (const char* s : {"P6", "2P3+P2", "P3", "P1", "3P3", "P4", "P2+P6"})
        CHECK(variable_k(s) == Verdict::PolynomialTime);
    for (const char* s : {"P7", "P5+P4", "P6+P6", "P10"})
        CHECK(variable_k(s) == Verdict::Quasipolynomial);
    for (const char* s : {"claw", "C4", "C3", "chair", "H1", "K1,4"})
        CHECK(variable_k(s) == Verdict::NpComplete);
}

TEST_CASE("classifier verdicts nest as the theorems state") {
    // PolynomialTime implies membership in S
    Rng rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        Graph h = random_graph(rng, rng.uniform_int(1, 7), rng.uniform_int(10, 60) / 100.0);
        Classification c = classify_fixed_k(h);
        if (c.verdict == Verdict::PolynomialTime) CHECK(is_in_S(h));
        if (c.verdict == Verdict::NpComplete) CHECK_FALSE(is_in_S(h));
    }
}

TEST_CASE("classifiers cross-validate against brute-force embedding oracles") {
    std::vector<std::string> listed = {
        "chair", "claw",  "P1",   "P2", "P3",     "P4",     "P5",       "P6",    "P7",
        "P8",    "P9",    "P10",  "P5+chair",     "C3",     "C4",       "C5",    "C6",
        "C7",    "C8",    "K1,4", "H1", "H2",     "H3",     "H1+P2",    "S1,1,3",
        "S2,2,2", "2K1,3", "2P3+P2", "P5+P4",     "P2+claw", "claw+chair"};
    for (const auto& s : listed) {
        Graph h = realize(parse_pattern(s));
        INFO("pattern " << s);

        Classification fixed = classify_fixed_k(h);
        bool poly_oracle = embeds_into_forest_plus_chair(h);
        bool s_oracle = in_S_oracle(h);
        CHECK((fixed.verdict == Verdict::PolynomialTime) == poly_oracle);
        CHECK((fixed.verdict == Verdict::NpComplete) == !s_oracle);

        Classification var = classify_variable_k(h);
        bool linear_forest = true;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) >= 3) linear_forest = false;
        linear_forest = linear_forest && detail::is_forest(h);
        bool var_poly_oracle = linear_forest && embeds_into_sP3_P6(h);
        CHECK((var.verdict == Verdict::NpComplete) == !linear_forest);
        CHECK((var.verdict == Verdict::PolynomialTime) == var_poly_oracle);
    }
}

TEST_CASE("random graphs: classifier predicates match the oracles") {
    Rng rng(9090);
    for (int trial = 0; trial < 150; ++trial) {
        Graph h = random_graph(rng, rng.uniform_int(1, 6), rng.uniform_int(10, 70) / 100.0);
        CHECK(is_in_S(h) == in_S_oracle(h));
        CHECK((classify_fixed_k(h).verdict == Verdict::PolynomialTime) ==
              embeds_into_forest_plus_chair(h));
    }
}
