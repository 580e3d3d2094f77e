#ifndef IDP_INSTANCE_HPP
#define IDP_INSTANCE_HPP

#include <stdexcept>
#include <vector>

#include "idp/graph.hpp"

namespace idp {

struct TerminalPair {
    Vertex s = -1;
    Vertex t = -1;

    friend bool operator==(const TerminalPair& a, const TerminalPair& b) {
        return a.s == b.s && a.t == b.t;
    }
};

/// A graph together with k pairwise-disjoint terminal pairs. Validated on
/// construction: all 2k terminals distinct and in range, s != t per pair.
struct IdpInstance {
    Graph graph;
    std::vector<TerminalPair> pairs;

    IdpInstance() = default;

    IdpInstance(Graph g, std::vector<TerminalPair> ps)
        : graph(std::move(g)), pairs(std::move(ps)) {
        validate();
    }

    int k() const { return static_cast<int>(pairs.size()); }

    void validate() const {
        if (pairs.empty()) throw std::invalid_argument("instance: needs at least one terminal pair");
        std::vector<Vertex> seen;
        for (const auto& p : pairs) {
            if (p.s < 0 || p.s >= graph.vertex_count() || p.t < 0 || p.t >= graph.vertex_count())
                throw std::invalid_argument("instance: terminal id out of range");
            if (p.s == p.t) throw std::invalid_argument("instance: terminal pair with s == t");
            seen.push_back(p.s);
            seen.push_back(p.t);
        }
        for (size_t i = 0; i < seen.size(); ++i)
            for (size_t j = i + 1; j < seen.size(); ++j)
                if (seen[i] == seen[j])
                    throw std::invalid_argument("instance: terminal pairs are not disjoint");
    }

    friend bool operator==(const IdpInstance& a, const IdpInstance& b) {
        return a.graph == b.graph && a.pairs == b.pairs;
    }
};

/// One vertex sequence per terminal pair; path i runs from s_i to t_i.
struct IdpSolution {
    std::vector<std::vector<Vertex>> paths;
};

} // namespace idp

#endif
