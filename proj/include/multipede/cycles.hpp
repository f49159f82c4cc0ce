#pragma once

#include <vector>

#include "multipede/hypergraph.hpp"

namespace multipede {

/// Cycle x_1..x_k with adjacency witnesses y_1..y_k; all 2k vertices
/// distinct. For k = 2 the witnesses are the two distinct edges' third
/// vertices.
struct WitnessedCycle {
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    int length() const { return static_cast<int>(xs.size()); }
    auto operator<=>(const WitnessedCycle&) const = default;
};

/// Weak cycle: k >= 3 distinct vertices, consecutive adjacency mod k, and
/// for k = 3 the triple itself is not a hyperedge.
bool is_weak_cycle(const Hypergraph& h, const std::vector<Vertex>& seq);

/// Cycle predicate. k >= 3: weak cycle with no consecutive triple forming a
/// hyperedge. k = 2: two distinct witnesses outside {x1,x2} exist.
bool is_cycle(const Hypergraph& h, const std::vector<Vertex>& seq);

bool is_witnessed_cycle(const Hypergraph& h, const WitnessedCycle& wc);

/// All witnessed cycles of length 2..max_len, one canonical representative
/// per rotation/reflection class, sorted.
std::vector<WitnessedCycle> find_witnessed_cycles(const Hypergraph& h, int max_len);

/// Reduction behind "every weak cycle includes a cycle": drop
/// x_{i+1} whenever {x_i,x_{i+1},x_{i+2}} is a hyperedge; the k=4
/// degenerate case yields a length-2 cycle.
std::vector<Vertex> cycle_from_weak_cycle(const Hypergraph& h, std::vector<Vertex> seq);

/// Vertex set of a witnessed cycle (xs and ys together).
VertexSet cycle_vertex_set(const WitnessedCycle& wc);

}  // namespace multipede
