#ifndef FACTORIUM_TESTS_FIXTURES_HPP
#define FACTORIUM_TESTS_FIXTURES_HPP

#include <random>

#include "factorium/graph.hpp"

namespace fixtures {

using factorium::Graph;

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// center 0, leaves 1..n-1
inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

// triangles 0-1-2 and 3-4-5 joined by a matching
inline Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// outer C5 on 0..4, inner pentagram on 5..9, spokes i-(i+5)
inline Graph petersen() {
    return Graph(10, {{0, 1},
                      {1, 2},
                      {2, 3},
                      {3, 4},
                      {0, 4},
                      {0, 5},
                      {1, 6},
                      {2, 7},
                      {3, 8},
                      {4, 9},
                      {5, 7},
                      {7, 9},
                      {6, 9},
                      {6, 8},
                      {5, 8}});
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.size());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace fixtures

#endif
