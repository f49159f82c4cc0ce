#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "multipede/errors.hpp"

namespace multipede {

using Vertex = int;
using Edge = std::array<Vertex, 3>;  // sorted triple a<b<c

// Sorted duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

Edge make_edge(Vertex a, Vertex b, Vertex c);
VertexSet make_vertex_set(std::vector<Vertex> vs);

/// 3-uniform hypergraph on vertices 0..n-1. Edges are kept sorted
/// lexicographically, each a sorted triple; construction validates both.
class Hypergraph {
  public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(Vertex a, Vertex b, Vertex c) const;
    bool has_edge(const Edge& e) const { return has_edge(e[0], e[1], e[2]); }

    /// Edges containing vertex v.
    std::vector<Edge> edges_at(Vertex v) const;

    bool operator==(const Hypergraph&) const = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

void check_vertex_set(const Hypergraph& h, const VertexSet& x);

/// Number of hyperedges contained in X.
int weight(const Hypergraph& h, const VertexSet& x);

struct Induced {
    Hypergraph sub;
    std::vector<Vertex> to_parent;  // new vertex i -> original vertex
};

/// Sub-hypergraph on X, relabeled 0..|X|-1 in increasing original order.
Induced induced(const Hypergraph& h, const VertexSet& x);

/// All z with {x,y,z} a hyperedge; nonempty iff x,y adjacent.
VertexSet witnesses(const Hypergraph& h, Vertex x, Vertex y);

bool adjacent(const Hypergraph& h, Vertex x, Vertex y);

std::ostream& operator<<(std::ostream& os, const Hypergraph& h);

}  // namespace multipede
