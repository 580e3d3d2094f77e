#ifndef IDP_INDUCED_HPP
#define IDP_INDUCED_HPP

#include <optional>
#include <vector>

#include "idp/graph.hpp"
#include "idp/pattern.hpp"

namespace idp {

namespace detail {

// Assignment order for pattern vertices: BFS inside each component starting
// from its smallest id, components by smallest id. Keeps every vertex after
// the first of its component attached to an already-placed neighbor, which
// is what makes the candidate sets small.
inline std::vector<int> embedding_order(const Graph& pat) {
    const int pn = pat.vertex_count();
    std::vector<int> order;
    std::vector<char> seen(pn, 0);
    for (int root = 0; root < pn; ++root) {
        if (seen[root]) continue;
        std::vector<int> queue{root};
        seen[root] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            order.push_back(v);
            for (int w : pat.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

class InducedSearch {
public:
    InducedSearch(const Graph& host, const Graph& pat)
        : host_(host), pat_(pat), order_(embedding_order(pat)),
          map_(pat.vertex_count(), -1), used_(host.vertex_count()) {}

    std::optional<std::vector<Vertex>> run() {
        if (pat_.vertex_count() == 0) return std::vector<Vertex>{};
        if (pat_.vertex_count() > host_.vertex_count()) return std::nullopt;
        if (place(0)) return map_;
        return std::nullopt;
    }

private:
    bool consistent(int pv, Vertex hv) const {
        if (host_.degree(hv) < pat_.degree(pv)) return false;
        for (int prev : order_) {
            if (prev == pv) break;
            Vertex mapped = map_[prev];
            if (pat_.adjacent(pv, prev) != host_.adjacent(hv, mapped)) return false;
        }
        return true;
    }

    bool place(size_t depth) {
        if (depth == order_.size()) return true;
        int pv = order_[depth];

        // Prefer extending from a mapped pattern neighbor; candidates are
        // then that image's host neighbors instead of every host vertex.
        Vertex anchor = -1;
        for (int pw : pat_.neighbors(pv))
            if (map_[pw] >= 0) {
                anchor = map_[pw];
                break;
            }

        if (anchor >= 0) {
            for (Vertex hv : host_.neighbors(anchor)) {
                if (used_.test(hv) || !consistent(pv, hv)) continue;
                map_[pv] = hv;
                used_.set(hv);
                if (place(depth + 1)) return true;
                used_.reset(hv);
                map_[pv] = -1;
            }
        } else {
            for (Vertex hv = 0; hv < host_.vertex_count(); ++hv) {
                if (used_.test(hv) || !consistent(pv, hv)) continue;
                map_[pv] = hv;
                used_.set(hv);
                if (place(depth + 1)) return true;
                used_.reset(hv);
                map_[pv] = -1;
            }
        }
        return false;
    }

    const Graph& host_;
    const Graph& pat_;
    std::vector<int> order_;
    std::vector<Vertex> map_;
    Bitset used_;
};

} // namespace detail

/// Exhaustive induced-subgraph search. Returns an injective map pattern id ->
/// host id preserving edges and non-edges, or nothing if no induced copy
/// exists. Deterministic: candidates are tried in ascending host id.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern) {
    detail::InducedSearch search(host, pattern);
    return search.run();
}

inline std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Pattern& p) {
    return find_induced(host, realize(p));
}

inline bool is_h_free(const Graph& host, const Pattern& p) {
    return !find_induced(host, p).has_value();
}

inline bool is_h_free(const Graph& host, const Graph& pattern) {
    return !find_induced(host, pattern).has_value();
}

namespace detail {

inline bool extend_induced_path(const Graph& g, std::vector<Vertex>& path,
                                Bitset& in_path, int bound) {
    if (static_cast<int>(path.size()) > bound) return true; // exceeded
    Vertex frontier = path.back();
    for (Vertex w : g.neighbors(frontier)) {
        if (in_path.test(w)) continue;
        bool chord = false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) {
                chord = true;
                break;
            }
        if (chord) continue;
        path.push_back(w);
        in_path.set(w);
        if (extend_induced_path(g, path, in_path, bound)) return true;
        in_path.reset(w);
        path.pop_back();
    }
    return false;
}

} // namespace detail

/// True iff the host has no induced path on more than `bound` vertices
/// (exact bounded search over induced paths).
inline bool longest_induced_path_at_most(const Graph& g, int bound) {
    if (bound < 1) throw std::invalid_argument("longest_induced_path_at_most: bound >= 1");
    if (g.vertex_count() <= bound) return true;
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        std::vector<Vertex> path{start};
        Bitset in_path(g.vertex_count());
        in_path.set(start);
        if (detail::extend_induced_path(g, path, in_path, bound)) return false;
    }
    return true;
}

namespace detail {

// Component ids via union-find free DFS.
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int next = 0;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = next;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_forest(const Graph& g) {
    auto comp = component_ids(g);
    int comps = 0;
    for (int c : comp) comps = std::max(comps, c + 1);
    // forest iff m = n - #components
    return g.edge_count() == g.vertex_count() - comps;
}

} // namespace detail

/// Membership in the class whose components are paths or subdivided claws:
/// forest, maximum degree <= 3, at most one degree-3 vertex per component.
inline bool is_in_S(const Graph& h) {
    if (!detail::is_forest(h)) return false;
    auto comp = detail::component_ids(h);
    int comps = 0;
    for (int c : comp) comps = std::max(comps, c + 1);
    std::vector<int> deg3_per_comp(comps, 0);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) > 3) return false;
        if (h.degree(v) == 3) ++deg3_per_comp[comp[v]];
    }
    for (int c : deg3_per_comp)
        if (c > 1) return false;
    return true;
}

} // namespace idp

#endif
