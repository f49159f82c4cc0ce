#pragma once

#include "multipede/structure.hpp"

namespace multipede {

/// Counting-refinement equivalence oracle: iterated refinement of k-tuple
/// colors (atomic type, then per-position substitution multisets) until
/// stable; the structures are equivalent iff their stable color multisets
/// over all k-tuples coincide. Complete and sound for C^k-equivalence on
/// relational structures.
bool ck_equivalent(const RelStructure& a, const RelStructure& b, int k, int max_size = 4096);

}  // namespace multipede
