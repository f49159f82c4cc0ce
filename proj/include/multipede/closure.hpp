#pragma once

#include <vector>

#include "multipede/hypergraph.hpp"

namespace multipede {

/// X attracts y when some hyperedge has two vertices in X and third y.
bool attracts(const Hypergraph& h, const VertexSet& x, Vertex y);

bool is_closed(const Hypergraph& h, const VertexSet& x);

/// Least attract-closed superset of X.
VertexSet closure(const Hypergraph& h, const VertexSet& x);

/// Ordering z_1..z_p of closure(Y)-Y such that each z_j is attracted by
/// Y ∪ {z_i : i<j}; lowest vertex first among candidates.
std::vector<Vertex> attraction_order(const Hypergraph& h, const VertexSet& y);

struct UniqueWitnessOrder {
    std::vector<Vertex> order;    // Z - Y in attraction order
    std::vector<Edge> witnesses;  // the unique witnessing hyperedge per step
};

/// Thrown when some attraction step has two witnessing hyperedges, which
/// contradicts 2k-meagerness; carries the dense set built from the proof.
struct UniqueWitnessError : IntegrityError {
    VertexSet dense_set;
    UniqueWitnessError(const std::string& msg, VertexSet ds)
        : IntegrityError(msg), dense_set(std::move(ds)) {}
};

/// With Y = closure(X) ∪ {z0} and Z = closure(Y): the ordering of Z-Y with
/// the unique witnessing hyperedge per step. Requires z0 ∉ closure(X).
UniqueWitnessOrder unique_witness_order(const Hypergraph& h, const VertexSet& x, Vertex z0);

}  // namespace multipede
