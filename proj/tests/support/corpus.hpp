#pragma once

// Seeded random instance generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "tcoi/graph.hpp"

namespace tcoi::corpus {

// Connected graph on n vertices: random spanning tree plus extra edges.
inline Graph random_connected(std::mt19937& rng, int n, double extra_edge_prob = 0.25) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution extra(extra_edge_prob);
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    Graph tree(n, edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.has_edge(u, v) && extra(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph random_tree(std::mt19937& rng, int n) { return random_connected(rng, n, 0.0); }

// Disconnected mix of P2 components and larger connected blocks, never
// consisting of P2 components alone.
inline Graph random_disconnected_mix(std::mt19937& rng, int max_total = 14) {
    Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 4));
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts && g.order() + 2 <= max_total; ++i) {
        if (rng() % 2 == 0) {
            g = disjoint_union(g, make_path(2));
        } else {
            int n = 3 + static_cast<int>(rng() % 4);
            if (g.order() + n > max_total) n = 2;
            g = disjoint_union(g, n == 2 ? make_path(2) : random_connected(rng, n));
        }
    }
    if (connected_components(g).size() < 2) g = disjoint_union(g, make_path(2));
    return g;
}

}  // namespace tcoi::corpus
