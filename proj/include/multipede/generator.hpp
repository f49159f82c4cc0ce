#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multipede/density.hpp"
#include "multipede/hypergraph.hpp"

namespace multipede {

uint64_t splitmix64(uint64_t x);

/// Seed of attempt t, a pure function of (seed, t); attempts are
/// independent streams.
uint64_t attempt_seed(uint64_t seed, uint64_t t);

/// Each of the C(n,3) triples included independently with probability
/// n^(-2+eps).
Hypergraph sample_binomial(int n, double eps, uint64_t seed);

/// m distinct triples chosen uniformly without replacement.
Hypergraph sample_fixed(int n, int m, uint64_t seed);

/// Edges { (base + i) mod n : i = 0..n-1 }, deduplicated.
Hypergraph circulant(int n, const std::array<int, 3>& base);

struct Refined {
    Hypergraph graph;
    std::vector<Vertex> to_parent;  // new vertex -> original vertex
    int red_removed = 0;
    int uncovered_removed = 0;
    bool empty = false;
};

/// Remove all red-block vertices at level l; if prune_uncovered, then
/// iteratively drop vertices lying in no remaining edge.
Refined refine_to_green(const Hypergraph& h, int l, bool prune_uncovered);

enum class GenModel { Binomial, FixedEdges, Circulant };

struct GenConfig {
    int l = 2;
    int min_size = 1;            // N: minimum output cardinality
    GenModel model = GenModel::Binomial;
    int n = 0;                   // 0 = default max(2N, 48)
    double eps = 0.1;            // binomial exponent offset
    int m = 0;                   // fixed-edges count
    std::array<int, 3> base{0, 1, 3};  // circulant base residues
    uint64_t seed = 0;
    int max_attempts = 200;
    bool prune_uncovered = true;
    bool override_eps_bound = false;  // allow eps >= 1/(2l+3)
};

struct AttemptStats {
    uint64_t seed = 0;
    int edge_count = 0;
    int red_vertices = 0;
    int green_size = 0;
    int green_edges = 0;
    bool odd = false;
    bool meager = false;
    bool success = false;
    // Refinement/coverage monitoring; report data, not assertions.
    double red_fraction_of_quarter = 0.0;   // red vertices / (n/4)
    int coverage_samples = 0;               // sampled sets of size >= n/4
    int coverage_hits = 0;                  // ... that contain a hyperedge
};

struct GenReport {
    GenConfig config;
    std::vector<AttemptStats> attempts;
    bool success = false;
    int success_attempt = -1;
};

struct GenResult {
    std::optional<Hypergraph> graph;  // present iff report.success
    GenReport report;
};

/// Sample per model, refine to green, and emit the first attempt whose
/// output independently verifies odd ∧ l-meager ∧ size >= min_size.
GenResult generate_odd_meager(const GenConfig& cfg);

std::string format_report(const GenReport& report);

}  // namespace multipede
