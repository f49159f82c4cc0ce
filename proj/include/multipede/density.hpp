#pragma once

#include <optional>
#include <vector>

#include "multipede/hypergraph.hpp"

namespace multipede {

bool is_dense(const Hypergraph& h, const VertexSet& x);
bool is_super_dense(const Hypergraph& h, const VertexSet& x);

struct Verdict {
    bool ok = false;
    std::optional<VertexSet> witness;  // on failure, a minimal offending set
    explicit operator bool() const { return ok; }
};

enum class Algorithm { Auto, BruteForce };

/// True iff no nonempty dense set of cardinality <= 2l exists. The default
/// algorithm enumerates unions of <= l hyperedges, which is exact on every
/// input: any dense set of cardinality c <= 2l contains ceil(c/2) of its
/// hyperedges whose union is itself dense. BruteForce scans all subsets
/// (n <= 16).
Verdict is_meager(const Hypergraph& h, int l, Algorithm alg = Algorithm::Auto);

/// Dual of is_meager for super-dense sets (unions of <= l+1 hyperedges).
Verdict is_modest(const Hypergraph& h, int l, Algorithm alg = Algorithm::Auto);

/// All dense sets of cardinality <= max_card with no dense proper nonempty
/// subset, sorted lexicographically. Every minimal dense set equals the
/// union of ceil(|X|/2) of its hyperedges, so candidates come from edge
/// subsets of size <= ceil(max_card/2).
std::vector<VertexSet> minimal_dense_sets(const Hypergraph& h, int max_card);

/// Dense-subset scan over all subsets of cardinality <= max_card (n <= 16).
std::vector<VertexSet> minimal_dense_sets_bruteforce(const Hypergraph& h, int max_card);

/// Full GF(2) column rank of the incidence matrix, i.e. every nonempty
/// vertex set is met oddly by some hyperedge.
bool is_odd(const Hypergraph& h);

/// A nonempty set met evenly by every hyperedge, if one exists (kernel
/// vector of the incidence matrix).
std::optional<VertexSet> odd_failing_set(const Hypergraph& h);

/// Exhaustive check over all 2^n - 1 nonempty sets; n <= 20.
Verdict is_odd_bruteforce(const Hypergraph& h);

struct RedGreenDecomposition {
    std::vector<VertexSet> red_blocks;
    VertexSet green;
    int l = 0;
    bool green_empty = false;
    // Disjointness diagnostics; guaranteed only on (2l+2)-modest inputs.
    bool blocks_disjoint = true;       // distinct red blocks are disjoint
    bool adjacent_reds_share = true;   // adjacent red vertices share a block
    bool green_one_red_neighbor = true;  // no green vertex adjacent to two reds
    Induced green_subhypergraph;       // induced on green (green edges only)
};

/// Red blocks = minimal dense sets of cardinality <= 2l; green = the rest.
/// Modesty is not required; the lemma diagnostics report whether the
/// disjointness lemmas held on this input.
RedGreenDecomposition red_green(const Hypergraph& h, int l);

}  // namespace multipede
