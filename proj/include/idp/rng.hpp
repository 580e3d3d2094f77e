#ifndef IDP_RNG_HPP
#define IDP_RNG_HPP

#include <cstdint>
#include <random>

#include "idp/graph.hpp"
#include "idp/instance.hpp"

namespace idp {

// mt19937_64 is fully pinned by the standard, so seeded runs reproduce
// byte-identically across platforms. The distribution helpers below avoid
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform01() { return (next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 eng_;
};

inline Graph random_graph(Rng& rng, int n, double edge_probability) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(edge_probability)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Random instance with k disjoint terminal pairs drawn without replacement.
inline IdpInstance random_instance(Rng& rng, int n, double edge_probability, int k) {
    if (n < 2 * k) throw std::invalid_argument("random_instance: n < 2k");
    Graph g = random_graph(rng, n, edge_probability);
    std::vector<Vertex> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    // partial Fisher-Yates for the 2k terminals
    for (int i = 0; i < 2 * k; ++i) {
        int j = rng.uniform_int(i, n - 1);
        std::swap(ids[i], ids[j]);
    }
    std::vector<TerminalPair> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({ids[2 * i], ids[2 * i + 1]});
    return IdpInstance(std::move(g), std::move(pairs));
}

} // namespace idp

#endif
