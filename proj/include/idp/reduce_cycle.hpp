#ifndef IDP_REDUCE_CYCLE_HPP
#define IDP_REDUCE_CYCLE_HPP

#include <array>

#include "idp/artifact.hpp"
#include "idp/solve.hpp"

namespace idp {

namespace detail {

// Adds `count` internal vertices between u and v (a plain edge when count
// is 0), labelling them under `prefix`.
inline void add_gadget_path(GraphBuilder& b, Vertex u, Vertex v, int count,
                            const std::string& prefix) {
    Vertex prev = u;
    for (int i = 0; i < count; ++i) {
        Vertex w = b.add_vertex(prefix + "[" + std::to_string(i) + "]");
        b.add_edge(prev, w);
        prev = w;
    }
    b.add_edge(prev, v);
}

} // namespace detail

/// Compile a hole-through-(x,y) question into a two-pair instance. x and y
/// must have degree exactly 2 and be non-adjacent. x is replaced by the
/// gadget on s1,p1,q1,r1,s2,p2,q2,r2 (q1,q2 are the bottlenecks towards
/// x's old neighbors), y symmetrically by t1,a1,b1,c1,t2,a2,b2,c2. Every
/// edge incident to a new vertex is subdivided `subdivisions` times; the
/// terminal pairs are (s1,t1),(s2,t2).
inline ReductionArtifact cycle_to_idp(const Graph& g, Vertex x, Vertex y, int subdivisions) {
    if (x == y) throw std::invalid_argument("cycle_to_idp: x == y");
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        throw std::invalid_argument("cycle_to_idp: vertex id out of range");
    if (g.degree(x) != 2 || g.degree(y) != 2)
        throw std::invalid_argument("cycle_to_idp: x and y must have degree exactly 2");
    if (g.adjacent(x, y)) throw std::invalid_argument("cycle_to_idp: x adjacent to y is not supported");
    if (subdivisions < 0) throw std::invalid_argument("cycle_to_idp: negative subdivision count");

    const Vertex x1 = g.neighbors(x)[0], x2 = g.neighbors(x)[1];
    const Vertex y1 = g.neighbors(y)[0], y2 = g.neighbors(y)[1];

    GraphBuilder b;
    std::vector<Vertex> remap(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == x || v == y) continue;
        std::string lab = g.label(v);
        remap[v] = b.add_vertex(lab.empty() ? "src:v[" + std::to_string(v) + "]" : lab);
    }
    for (const auto& [u, v] : g.edges())
        if (u != x && u != y && v != x && v != y) b.add_edge(remap[u], remap[v]);

    auto sub_path = [&](const std::string& tag, Vertex u, Vertex v, const std::string& name) {
        detail::add_gadget_path(b, u, v, subdivisions, tag + ":sub_" + name);
    };

    // x gadget
    Vertex s1 = b.add_vertex("xgadget:s1");
    Vertex s2 = b.add_vertex("xgadget:s2");
    Vertex p1 = b.add_vertex("xgadget:p1");
    Vertex q1 = b.add_vertex("xgadget:q1");
    Vertex r1 = b.add_vertex("xgadget:r1");
    Vertex p2 = b.add_vertex("xgadget:p2");
    Vertex q2 = b.add_vertex("xgadget:q2");
    Vertex r2 = b.add_vertex("xgadget:r2");
    sub_path("xgadget", s1, p1, "s1_p1");
    sub_path("xgadget", p1, q1, "p1_q1");
    sub_path("xgadget", q1, remap[x1], "q1_x1");
    sub_path("xgadget", q1, r1, "q1_r1");
    sub_path("xgadget", r1, s2, "r1_s2");
    sub_path("xgadget", s2, r2, "s2_r2");
    sub_path("xgadget", r2, q2, "r2_q2");
    sub_path("xgadget", q2, remap[x2], "q2_x2");
    sub_path("xgadget", p2, s1, "p2_s1");
    sub_path("xgadget", p2, q2, "p2_q2");

    // y gadget
    Vertex t1 = b.add_vertex("ygadget:t1");
    Vertex t2 = b.add_vertex("ygadget:t2");
    Vertex a1 = b.add_vertex("ygadget:a1");
    Vertex b1 = b.add_vertex("ygadget:b1");
    Vertex c1 = b.add_vertex("ygadget:c1");
    Vertex a2 = b.add_vertex("ygadget:a2");
    Vertex b2 = b.add_vertex("ygadget:b2");
    Vertex c2 = b.add_vertex("ygadget:c2");
    sub_path("ygadget", a1, t1, "a1_t1");
    sub_path("ygadget", a1, b1, "a1_b1");
    sub_path("ygadget", b1, remap[y1], "b1_y1");
    sub_path("ygadget", b1, c1, "b1_c1");
    sub_path("ygadget", c1, t2, "c1_t2");
    sub_path("ygadget", a2, t1, "a2_t1");
    sub_path("ygadget", a2, b2, "a2_b2");
    sub_path("ygadget", b2, remap[y2], "b2_y2");
    sub_path("ygadget", b2, c2, "b2_c2");
    sub_path("ygadget", c2, t2, "c2_t2");

    Graph out = b.build();
    ReductionArtifact art;
    art.instance = IdpInstance(out, {{s1, t1}, {s2, t2}});
    for (Vertex v = 0; v < out.vertex_count(); ++v) art.provenance[v] = out.label(v);
    art.meta.source_kind = "cycle";
    art.meta.source_text = serialize_graph_text(g);
    art.meta.source_digest = fnv1a_digest(art.meta.source_text);
    art.meta.params = {{"x", x}, {"y", y}, {"subdivisions", subdivisions}};
    art.meta.edge_class_counts = {
        {"source", out.edge_count() - 20 * (subdivisions + 1)},
        {"gadget", 20 * (subdivisions + 1)},
    };
    art.validate();
    return art;
}

/// Fill in expected_answer from the hole oracle on the source instance.
inline void populate_expected_cycle(ReductionArtifact& art, const Graph& source, Vertex x,
                                    Vertex y, const SolveBudget& budget) {
    HoleResult hole = find_hole_through(source, x, y, budget);
    if (hole.status == HoleStatus::BudgetExhausted) return; // never guess
    art.meta.expected_answer = (hole.status == HoleStatus::Found);
    art.meta.answer_provenance = "oracle";
}

} // namespace idp

#endif
