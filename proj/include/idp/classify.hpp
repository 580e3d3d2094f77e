#ifndef IDP_CLASSIFY_HPP
#define IDP_CLASSIFY_HPP

#include <string>

#include "idp/induced.hpp"

namespace idp {

enum class Verdict { PolynomialTime, NpComplete, Quasipolynomial, Open };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::PolynomialTime: return "PolynomialTime";
    case Verdict::NpComplete: return "NpComplete";
    case Verdict::Quasipolynomial: return "Quasipolynomial";
    case Verdict::Open: return "Open";
    }
    return "?";
}

struct Classification {
    Verdict verdict;
    std::string reason; // machine-readable rule id
};

namespace detail {

enum class ComponentShape { PathLike, Claw, Chair, Other };

// Shape of one tree component given its vertex list. Degrees are relative
// to the component (== the whole graph for a component).
inline ComponentShape component_shape(const Graph& h, const std::vector<Vertex>& verts) {
    int deg3 = 0, max_deg = 0;
    for (Vertex v : verts) {
        max_deg = std::max(max_deg, h.degree(v));
        if (h.degree(v) == 3) ++deg3;
    }
    if (max_deg <= 2) return ComponentShape::PathLike;
    if (max_deg > 3 || deg3 > 1) return ComponentShape::Other;
    // exactly one degree-3 vertex: claw on 4 vertices, chair on 5
    if (verts.size() == 4) return ComponentShape::Claw;
    if (verts.size() == 5) {
        int deg2 = 0;
        for (Vertex v : verts)
            if (h.degree(v) == 2) ++deg2;
        return deg2 == 1 ? ComponentShape::Chair : ComponentShape::Other;
    }
    return ComponentShape::Other;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g) {
    auto comp = component_ids(g);
    int comps = 0;
    for (int c : comp) comps = std::max(comps, c + 1);
    std::vector<std::vector<Vertex>> out(comps);
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[comp[v]].push_back(v);
    return out;
}

} // namespace detail

/// Fixed-k regime. PolynomialTime iff h is a subgraph of a linear forest
/// plus one chair: h must be a forest whose components are all paths except
/// at most one isomorphic to the claw or the chair. NpComplete iff h is
/// outside S. Open in between.
inline Classification classify_fixed_k(const Graph& h) {
    if (!detail::is_forest(h)) return {Verdict::NpComplete, "has-cycle"};
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) >= 4) return {Verdict::NpComplete, "max-degree-at-least-4"};

    int branching_components = 0; // components with a degree-3 vertex
    bool branching_fits_chair = true;
    for (const auto& verts : detail::components(h)) {
        auto shape = detail::component_shape(h, verts);
        if (shape == detail::ComponentShape::PathLike) continue;
        ++branching_components;
        if (shape == detail::ComponentShape::Other) branching_fits_chair = false;
    }
    if (branching_components == 0)
        return {Verdict::PolynomialTime, "linear-forest"};
    if (branching_components >= 2) {
        // Two degree-3 vertices in one component is already NpComplete;
        // spread across components keeps h inside S, hence Open.
        for (const auto& verts : detail::components(h)) {
            int deg3 = 0;
            for (Vertex v : verts)
                if (h.degree(v) == 3) ++deg3;
            if (deg3 > 1) return {Verdict::NpComplete, "two-degree-3-in-component"};
        }
        return {Verdict::Open, "in-S-beyond-chair"};
    }
    // exactly one branching component
    for (const auto& verts : detail::components(h)) {
        int deg3 = 0;
        for (Vertex v : verts)
            if (h.degree(v) == 3) ++deg3;
        if (deg3 > 1) return {Verdict::NpComplete, "two-degree-3-in-component"};
    }
    if (branching_fits_chair)
        return {Verdict::PolynomialTime, "subgraph-of-linear-forest-plus-chair"};
    return {Verdict::Open, "in-S-beyond-chair"};
}

/// Variable-k regime. NpComplete iff h is not a linear forest;
/// PolynomialTime iff h is a linear forest with at most one component on
/// >= 4 vertices and that component has <= 6 vertices; Quasipolynomial
/// otherwise. Components on <= 3 vertices embed into their own P3 copy
/// and two components on >= 4 vertices cannot share the single P6.
inline Classification classify_variable_k(const Graph& h) {
    if (!detail::is_forest(h)) return {Verdict::NpComplete, "not-linear-forest"};
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) >= 3) return {Verdict::NpComplete, "not-linear-forest"};

    int big_components = 0;
    size_t biggest = 0;
    for (const auto& verts : detail::components(h)) {
        if (verts.size() >= 4) ++big_components;
        biggest = std::max(biggest, verts.size());
    }
    if (big_components == 0 || (big_components == 1 && biggest <= 6))
        return {Verdict::PolynomialTime, "induced-in-sP3+P6"};
    return {Verdict::Quasipolynomial, "linear-forest-beyond-sP3+P6"};
}

} // namespace idp

#endif
