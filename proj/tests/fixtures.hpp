#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "multipede/generator.hpp"
#include "multipede/hypergraph.hpp"

namespace fixtures {

using multipede::Edge;
using multipede::Hypergraph;
using multipede::VertexSet;

// Single edge on 3 vertices.
inline Hypergraph h1() { return Hypergraph(3, {{0, 1, 2}}); }

// Two edges sharing a pair; {0,1,2,3} is dense.
inline Hypergraph w4() { return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}); }

// All four triples on 4 vertices.
inline Hypergraph k4() {
    return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline Hypergraph c9() { return multipede::circulant(9, {0, 1, 3}); }

// circulant(13,{0,1,3}) plus the extra edge {0,4,9}; 14 edges, full rank.
inline Hypergraph c13p() {
    auto edges = multipede::circulant(13, {0, 1, 3}).edges();
    edges.push_back({0, 4, 9});
    std::sort(edges.begin(), edges.end());
    return Hypergraph(13, edges);
}

// Uniform random hypergraph with up to m distinct edges.
inline Hypergraph random_hypergraph(int n, int m, std::mt19937_64& rng) {
    std::set<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        int c = static_cast<int>(rng() % n);
        if (a == b || b == c || a == c) continue;
        edges.insert(multipede::make_edge(a, b, c));
    }
    return Hypergraph(n, {edges.begin(), edges.end()});
}

inline VertexSet random_subset(int n, int size, std::mt19937_64& rng) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    return multipede::make_vertex_set(std::move(all));
}

}  // namespace fixtures
