#ifndef IDP_GRAPH_HPP
#define IDP_GRAPH_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idp/bitset.hpp"

namespace idp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over dense vertex ids 0..n-1.
///
/// Immutable after construction: symmetric, irreflexive, no parallel edges.
/// Every mutation-style operation returns a fresh Graph. Optional per-vertex
/// labels carry gadget provenance through the reduction compilers.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<Edge>& edges,
          std::map<Vertex, std::string> labels = {})
        : n_(n), adj_(n), rows_(n, Bitset(n)), labels_(std::move(labels)) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        for (const auto& [u, v] : edges) add_edge_checked(u, v);
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        for (const auto& [v, lab] : labels_) {
            (void)lab;
            if (v < 0 || v >= n_) throw std::invalid_argument("graph: label id out of range");
        }
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int m = 0;
        for (const auto& nb : adj_) m += static_cast<int>(nb.size());
        return m / 2;
    }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    /// Adjacency row of v as a bitset (closed row available via row_closed).
    const Bitset& row(Vertex v) const { return rows_[v]; }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    /// Edges in canonical order: u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(edge_count());
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    const std::map<Vertex, std::string>& labels() const { return labels_; }

    std::string label(Vertex v) const {
        auto it = labels_.find(v);
        return it == labels_.end() ? std::string{} : it->second;
    }

    Graph with_labels(std::map<Vertex, std::string> labels) const {
        return Graph(n_, edges(), std::move(labels));
    }

    /// Structural integrity check (used by tests and debug paths).
    bool invariants_hold() const {
        for (Vertex u = 0; u < n_; ++u) {
            if (rows_[u].test(u)) return false;
            for (Vertex v : adj_[u]) {
                if (v < 0 || v >= n_ || v == u) return false;
                if (!rows_[v].test(u)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    void add_edge_checked(Vertex u, Vertex v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop rejected");
        if (rows_[u].test(v)) throw std::invalid_argument("graph: duplicate edge rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        rows_[u].set(v);
        rows_[v].set(u);
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Bitset> rows_;
    std::map<Vertex, std::string> labels_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
    return Graph(n, edges);
}

/// Incremental construction helper for the gadget compilers. Single-owner;
/// build() validates and freezes the result.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}

    Vertex add_vertex(std::string label = {}) {
        Vertex v = n_++;
        if (!label.empty()) labels_[v] = std::move(label);
        return v;
    }

    void set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }

    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

    bool has_edge(Vertex u, Vertex v) const {
        for (const auto& [a, b] : edges_)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }

    int vertex_count() const { return n_; }

    Graph build() const { return Graph(n_, edges_, labels_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
};

struct DeletionResult {
    Graph graph;
    std::vector<Vertex> remap; // old id -> new id, -1 if deleted
};

/// Remove `removed` and the whole neighborhood of `removed`, except vertices
/// listed in `keep`. Ids are densely re-indexed; the old->new map comes back
/// with the graph so callers can translate terminals.
inline DeletionResult delete_closed_neighborhood(const Graph& g,
                                                 const std::vector<Vertex>& keep,
                                                 const std::vector<Vertex>& removed) {
    const int n = g.vertex_count();
    Bitset keep_set(n), kill(n);
    for (Vertex v : keep) keep_set.set(v);
    for (Vertex v : removed) {
        if (keep_set.test(v))
            throw std::invalid_argument("delete_closed_neighborhood: keep and removed overlap");
        kill.set(v);
    }
    for (Vertex v : removed)
        for (Vertex w : g.neighbors(v))
            if (!keep_set.test(w)) kill.set(w);

    std::vector<Vertex> remap(n, -1);
    int next_id = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!kill.test(v)) remap[v] = next_id++;

    std::vector<Edge> edges;
    std::map<Vertex, std::string> labels;
    for (Vertex v = 0; v < n; ++v) {
        if (remap[v] < 0) continue;
        auto lab = g.label(v);
        if (!lab.empty()) labels[remap[v]] = lab;
        for (Vertex w : g.neighbors(v))
            if (v < w && remap[w] >= 0) edges.emplace_back(remap[v], remap[w]);
    }
    return {Graph(next_id, edges, std::move(labels)), std::move(remap)};
}

/// Replace edge uv by a u..v path with `times` fresh internal vertices.
/// New vertices are appended as n, n+1, ... in path order; times = 0 is the
/// identity.
inline Graph subdivide_edge(const Graph& g, Vertex u, Vertex v, int times) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("subdivide_edge: vertex id out of range");
    if (!g.adjacent(u, v)) throw std::invalid_argument("subdivide_edge: uv is not an edge");
    if (times < 0) throw std::invalid_argument("subdivide_edge: negative count");
    if (times == 0) return g;

    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!((e.first == std::min(u, v)) && (e.second == std::max(u, v))))
            edges.push_back(e);
    Vertex prev = u;
    for (int i = 0; i < times; ++i) {
        Vertex w = n + i;
        edges.emplace_back(prev, w);
        prev = w;
    }
    edges.emplace_back(prev, v);
    return Graph(n + times, edges, g.labels());
}

/// Subgraph induced by `vertices` (densely re-indexed, labels carried over).
inline DeletionResult induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    const int n = g.vertex_count();
    std::vector<Vertex> remap(n, -1);
    int next_id = 0;
    for (Vertex v : vertices) {
        if (v < 0 || v >= n) throw std::invalid_argument("induced_subgraph: id out of range");
        if (remap[v] < 0) remap[v] = next_id++;
    }
    std::vector<Edge> edges;
    std::map<Vertex, std::string> labels;
    for (Vertex v = 0; v < n; ++v) {
        if (remap[v] < 0) continue;
        auto lab = g.label(v);
        if (!lab.empty()) labels[remap[v]] = lab;
        for (Vertex w : g.neighbors(v))
            if (remap[w] >= 0 && remap[v] < remap[w]) edges.emplace_back(remap[v], remap[w]);
    }
    return {Graph(next_id, edges, std::move(labels)), std::move(remap)};
}

} // namespace idp

#endif
