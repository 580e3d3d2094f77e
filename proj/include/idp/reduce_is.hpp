#ifndef IDP_REDUCE_IS_HPP
#define IDP_REDUCE_IS_HPP

#include "idp/artifact.hpp"
#include "idp/independent_set.hpp"
#include "idp/solve.hpp"

namespace idp {

/// Vertex-choice-diamond compiler. Each of the k diamonds is a clique of
/// the n source vertices strung between hub vertices (consecutive diamonds
/// share a hub); the whole chain is duplicated, the two tails are joined by
/// a once-subdivided bridge, and consistency / independence / set edges tie
/// the copies together. Terminal pairs: (s^1,t^k) in the first copy and
/// (sigma^1,tau^k) in the second.
///
/// Distinct-edge counts: k*n*(n-1) consistency, 4k(k-1)|E| independence,
/// 2k(k-1)n set edges (each unordered diamond pair contributes one set of
/// four; the usual tally counts ordered pairs and lands on 4k(k-1)n).
inline ReductionArtifact is_to_idp(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_to_idp: k >= 1");
    const int n = g.vertex_count();

    GraphBuilder b;
    // copy 0: s/v/t names; copy 1: sigma/phi/tau names
    std::vector<std::vector<Vertex>> hub(2);          // hub[c][i], i = 0..k
    std::vector<std::vector<std::vector<Vertex>>> choice(2); // choice[c][i][j], i = 1..k
    long clique_edges = 0, hub_edges = 0;
    for (int c = 0; c < 2; ++c) {
        std::string copy = std::to_string(c + 1);
        hub[c].resize(k + 1);
        choice[c].assign(k + 1, {});
        for (int i = 0; i <= k; ++i)
            hub[c][i] = b.add_vertex("diamond:hub[" + std::to_string(i) + "," + copy + "]");
        for (int i = 1; i <= k; ++i) {
            auto& diamond = choice[c][i];
            for (int j = 0; j < n; ++j)
                diamond.push_back(b.add_vertex("diamond:v[" + std::to_string(i) + "," +
                                               std::to_string(j) + "," + copy + "]"));
            for (int j = 0; j < n; ++j) {
                b.add_edge(hub[c][i - 1], diamond[j]);
                b.add_edge(hub[c][i], diamond[j]);
                hub_edges += 2;
            }
            for (int j = 0; j < n; ++j)
                for (int l = j + 1; l < n; ++l) {
                    b.add_edge(diamond[j], diamond[l]); // clique modification
                    ++clique_edges;
                }
        }
    }
    // bridge between the two tails, subdivided once
    Vertex w = b.add_vertex("bridge:w");
    b.add_edge(hub[0][k], w);
    b.add_edge(w, hub[1][k]);

    long consistency = 0, independence = 0, set_edges = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                if (j != l) {
                    b.add_edge(choice[0][i][j], choice[1][i][l]);
                    ++consistency;
                }
    for (const auto& [p, q] : g.edges())
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                if (i == j) continue;
                b.add_edge(choice[0][i][p], choice[0][j][q]);
                b.add_edge(choice[0][i][p], choice[1][j][q]);
                b.add_edge(choice[1][i][p], choice[0][j][q]);
                b.add_edge(choice[1][i][p], choice[1][j][q]);
                independence += 4;
            }
    for (int l = 0; l < n; ++l)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                b.add_edge(choice[0][i][l], choice[0][j][l]);
                b.add_edge(choice[0][i][l], choice[1][j][l]);
                b.add_edge(choice[1][i][l], choice[0][j][l]);
                b.add_edge(choice[1][i][l], choice[1][j][l]);
                set_edges += 4;
            }

    Graph out = b.build();
    ReductionArtifact art;
    art.instance = IdpInstance(out, {{hub[0][0], hub[0][k]}, {hub[1][0], hub[1][k]}});
    for (Vertex v = 0; v < out.vertex_count(); ++v) art.provenance[v] = out.label(v);
    art.meta.source_kind = "is";
    art.meta.source_text = serialize_graph_text(g);
    art.meta.source_digest = fnv1a_digest(art.meta.source_text);
    art.meta.params = {{"k", k}, {"n", n}, {"source_edges", g.edge_count()}};
    art.meta.edge_class_counts = {
        {"clique", clique_edges},
        {"hub", hub_edges},
        {"bridge", 2},
        {"consistency", consistency},
        {"independence", independence},
        {"set", set_edges},
        {"set_ordered_tally", 2 * set_edges},
    };
    art.validate();
    return art;
}

inline void populate_expected_is(ReductionArtifact& art, const Graph& g, int k) {
    art.meta.expected_answer = has_independent_set(g, k).has_value();
    art.meta.answer_provenance = "oracle";
}

} // namespace idp

#endif
