#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "multipede/multipede.hpp"

namespace multipede {

/// Materialized relational form of a multipede: the game board and the
/// refinement oracle both work on this.
struct RelStructure {
    enum Sort { kSegment = 0, kFoot = 1, kSuperSegment = 2 };

    std::vector<int> sort;                     // per element 0..size()-1
    std::vector<std::pair<int, int>> foot_of;  // E: (foot, its segment)
    std::vector<std::pair<int, int>> less;     // segment order (level >= 3)
    std::vector<std::pair<int, int>> member;   // (segment, super-segment)
    std::vector<std::array<int, 3>> triples;   // symmetric T, sorted triples

    int size() const { return static_cast<int>(sort.size()); }
    bool has_pair(const std::vector<std::pair<int, int>>& rel, int a, int b) const;
    bool has_triple(int a, int b, int c) const;
    void canonicalize();  // sort relation lists for binary search
};

/// Element ids: segments 0..n-1, feet n+2s+b, super-segments (level 4,
/// materialized) 3n + subset-mask.
RelStructure to_structure(const Multipede& m);

int foot_id(const Multipede& m, Vertex segment, int label);
std::string describe_element(const RelStructure& s, const Multipede& m, int id);

/// Definitional clauses checked directly on the relational form: foot
/// degrees, hyperedge sort homogeneity, slave projection, the
/// four-positive-slaves condition, order totality, and at level 4 the
/// super-segment axioms (empty set, single-element extension,
/// extensionality). Returns violated clauses; empty = valid.
std::vector<std::string> validate_structure(const RelStructure& s, int level);

struct PebblePair {
    int pebble;  // 1..k
    int a, b;    // element of A, element of B
};

/// From-scratch partial-isomorphism check over the pebbled pairs:
/// injectivity both ways plus preservation of every atomic relation in
/// both directions.
bool is_partial_isomorphism(const RelStructure& a, const RelStructure& b,
                            const std::vector<PebblePair>& board);

}  // namespace multipede
