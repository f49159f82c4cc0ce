#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multipede/hypergraph.hpp"

namespace multipede {

/// A foot is (segment, 0) or (segment, 1).
using Foot = std::pair<Vertex, int>;

/// Set of segments whose two feet are transposed.
using FootMap = VertexSet;

/// Segments with two feet each over a segment hypergraph. The positive
/// slave class of each segment hyperedge h is one parity bit: the positive
/// slaves are the four foot-triples whose label sum is b(h) mod 2. Level 3
/// adds the numeric order on segments; level 4 the family of all segment
/// subsets (materialized when n <= cap, implicit above it).
struct Multipede {
    Hypergraph seg;
    std::vector<uint8_t> parity;  // aligned with seg.edges()
    int level = 2;
    bool supersegments_materialized = false;

    int n() const { return seg.n(); }
    int edge_count() const { return seg.edge_count(); }
    bool operator==(const Multipede&) const = default;
};

inline constexpr int kSupersegmentCap = 16;

Multipede build_multipede(const Hypergraph& h, std::vector<uint8_t> parity, int level,
                          bool implicit_supersegments = false, int cap = kSupersegmentCap);

/// Structural violations of the multipede definitions; empty = valid.
std::vector<std::string> validate(const Multipede& m);

struct Slave {
    std::array<Foot, 3> feet;
    bool positive = false;
};

/// The 8 slaves of a segment hyperedge, exactly 4 positive.
std::array<Slave, 8> slaves(const Multipede& m, const Edge& h);

/// Flip b(h) for every h containing x (the foot-transposition companion).
Multipede flip_segment_feet(const Multipede& m, Vertex x);

/// Flip b(h) exactly for h in S (edge indices into seg.edges()).
Multipede twist(const Multipede& m, const std::vector<int>& edge_indices);

struct FootSwapIsos {
    std::optional<FootMap> solution;    // none = not isomorphic (segment-fixing)
    std::vector<FootMap> kernel_basis;  // all solutions = solution + span(kernel)
};

/// Segment-fixing isomorphisms M -> N as swap-sets: solutions of A·x = t
/// over GF(2), A the incidence matrix and t the parity difference.
FootSwapIsos foot_swap_isomorphisms(const Multipede& m, const Multipede& n);

/// Trivial automorphism group; level >= 3 required (order fixes segments,
/// so this is kernel triviality of the incidence matrix).
bool is_rigid(const Multipede& m);

/// All swap-sets preserving slave positivity, checked by direct definition
/// over all 2^n candidates; level >= 3, n <= 12.
std::vector<FootMap> automorphisms_bruteforce(const Multipede& m);

/// Deterministic twist outside the incidence column space, when one exists
/// (nontrivial cokernel): lowest edge index j with u_j = 1 for the first
/// left-kernel basis vector u.
std::optional<std::vector<int>> noniso_twist_edges(const Multipede& m);

}  // namespace multipede
