#ifndef IDP_INDEPENDENT_SET_HPP
#define IDP_INDEPENDENT_SET_HPP

#include <optional>
#include <vector>

#include "idp/graph.hpp"

namespace idp {

namespace detail {

inline bool is_search(const Graph& g, Bitset& candidates, int need, std::vector<Vertex>& chosen) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    Vertex v = candidates.next(0);

    // include v
    Bitset saved = candidates;
    candidates.reset(v);
    candidates.and_not_with(g.row(v));
    chosen.push_back(v);
    if (is_search(g, candidates, need - 1, chosen)) return true;
    chosen.pop_back();
    candidates = saved;

    // exclude v
    candidates.reset(v);
    bool ok = is_search(g, candidates, need, chosen);
    candidates = saved;
    return ok;
}

} // namespace detail

/// Exact search for an independent set of size exactly k; returns the set
/// (ascending ids, deterministic) or nothing.
inline std::optional<std::vector<Vertex>> has_independent_set(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("independent_set: k >= 0");
    if (k == 0) return std::vector<Vertex>{};
    Bitset candidates(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) candidates.set(v);
    std::vector<Vertex> chosen;
    if (detail::is_search(g, candidates, k, chosen)) return chosen;
    return std::nullopt;
}

} // namespace idp

#endif
