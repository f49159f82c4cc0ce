#include "multipede/density.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "multipede/gf2.hpp"

namespace multipede {

bool is_dense(const Hypergraph& h, const VertexSet& x) {
    if (x.empty()) throw InputError("is_dense: empty vertex set");
    return static_cast<int>(x.size()) <= 2 * weight(h, x);
}

bool is_super_dense(const Hypergraph& h, const VertexSet& x) {
    if (x.empty()) throw InputError("is_super_dense: empty vertex set");
    return static_cast<int>(x.size()) < 2 * weight(h, x);
}

namespace {

// Edges of h contained in the (sorted) set u.
std::vector<Edge> edges_inside(const Hypergraph& h, const VertexSet& u) {
    std::vector<Edge> out;
    for (const auto& e : h.edges()) {
        if (std::binary_search(u.begin(), u.end(), e[0]) &&
            std::binary_search(u.begin(), u.end(), e[1]) &&
            std::binary_search(u.begin(), u.end(), e[2]))
            out.push_back(e);
    }
    return out;
}

// |S| <= 2*[S] over subsets S of u, testing only edges inside u.
// strict: test |S| < 2*[S] instead.
bool has_offending_proper_subset(const Hypergraph& h, const VertexSet& u, bool strict) {
    std::vector<Edge> inner = edges_inside(h, u);
    int c = static_cast<int>(u.size());
    std::vector<uint32_t> emasks;
    for (const auto& e : inner) {
        uint32_t m = 0;
        for (Vertex v : e)
            m |= 1u << (std::lower_bound(u.begin(), u.end(), v) - u.begin());
        emasks.push_back(m);
    }
    uint32_t full = (c >= 32) ? ~0u : ((1u << c) - 1);
    for (uint32_t s = 1; s < full; ++s) {  // proper nonempty subsets only
        int card = std::popcount(s);
        int w = 0;
        for (uint32_t em : emasks)
            if ((em & s) == em) ++w;
        if (strict ? card < 2 * w : card <= 2 * w) return true;
    }
    return false;
}

// Enumerate unions of up to max_edges hyperedges whose union has cardinality
// <= max_card, invoking cb on each distinct union.
template <typename Cb>
void edge_unions(const Hypergraph& h, int max_edges, int max_card, Cb cb) {
    const auto& es = h.edges();
    int m = static_cast<int>(es.size());
    std::set<VertexSet> seen;
    VertexSet cur;
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth > 0 && seen.insert(cur).second) cb(cur);
        if (depth == max_edges) return;
        for (int i = from; i < m; ++i) {
            VertexSet merged = cur;
            for (Vertex v : es[i])
                if (!std::binary_search(merged.begin(), merged.end(), v))
                    merged.insert(std::lower_bound(merged.begin(), merged.end(), v), v);
            if (static_cast<int>(merged.size()) > max_card) continue;
            std::swap(cur, merged);
            self(self, i + 1, depth + 1);
            std::swap(cur, merged);
        }
    };
    rec(rec, 0, 0);
}

std::vector<uint32_t> edge_masks_small(const Hypergraph& h) {
    std::vector<uint32_t> out;
    for (const auto& e : h.edges()) out.push_back((1u << e[0]) | (1u << e[1]) | (1u << e[2]));
    return out;
}

VertexSet mask_to_set(uint32_t m) {
    VertexSet out;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1u) out.push_back(v);
    return out;
}

// All minimal offending sets of cardinality <= max_card by full subset scan.
std::vector<VertexSet> minimal_offending_bruteforce(const Hypergraph& h, int max_card, bool strict) {
    if (h.n() > 16) throw CapacityError("brute-force subset scan limited to n <= 16");
    auto emasks = edge_masks_small(h);
    std::vector<uint32_t> offending;
    uint32_t total = h.n() >= 32 ? 0 : (1u << h.n());
    for (uint32_t s = 1; s < total; ++s) {
        int card = std::popcount(s);
        if (card > max_card) continue;
        int w = 0;
        for (uint32_t em : emasks)
            if ((em & s) == em) ++w;
        if (strict ? card < 2 * w : card <= 2 * w) offending.push_back(s);
    }
    std::vector<VertexSet> out;
    for (uint32_t s : offending) {
        bool minimal = true;
        for (uint32_t t : offending)
            if (t != s && (t & s) == t) { minimal = false; break; }
        if (minimal) out.push_back(mask_to_set(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> minimal_offending(const Hypergraph& h, int max_card, bool strict) {
    // A minimal offending set is the union of its hyperedges; picking just
    // enough of them reproduces the whole set by minimality.
    int max_edges = strict ? max_card / 2 + 1 : (max_card + 1) / 2;
    std::set<VertexSet> found;
    edge_unions(h, max_edges, max_card, [&](const VertexSet& u) {
        int c = static_cast<int>(u.size());
        int w = weight(h, u);
        bool offends = strict ? c < 2 * w : c <= 2 * w;
        if (!offends) return;
        if (!has_offending_proper_subset(h, u, strict)) found.insert(u);
    });
    return {found.begin(), found.end()};
}

Verdict verdict_from(std::vector<VertexSet> sets) {
    Verdict v;
    v.ok = sets.empty();
    if (!sets.empty()) v.witness = sets.front();
    return v;
}

}  // namespace

std::vector<VertexSet> minimal_dense_sets(const Hypergraph& h, int max_card) {
    return minimal_offending(h, max_card, /*strict=*/false);
}

std::vector<VertexSet> minimal_dense_sets_bruteforce(const Hypergraph& h, int max_card) {
    return minimal_offending_bruteforce(h, max_card, /*strict=*/false);
}

Verdict is_meager(const Hypergraph& h, int l, Algorithm alg) {
    if (l < 2) throw InputError("is_meager: l must be >= 2");
    if (alg == Algorithm::BruteForce)
        return verdict_from(minimal_dense_sets_bruteforce(h, 2 * l));
    return verdict_from(minimal_dense_sets(h, 2 * l));
}

Verdict is_modest(const Hypergraph& h, int l, Algorithm alg) {
    if (l < 2) throw InputError("is_modest: l must be >= 2");
    if (alg == Algorithm::BruteForce)
        return verdict_from(minimal_offending_bruteforce(h, 2 * l, /*strict=*/true));
    return verdict_from(minimal_offending(h, 2 * l, /*strict=*/true));
}

bool is_odd(const Hypergraph& h) {
    return incidence_matrix(h).rank() == h.n();
}

std::optional<VertexSet> odd_failing_set(const Hypergraph& h) {
    auto basis = incidence_matrix(h).kernel();
    if (basis.empty()) return std::nullopt;
    VertexSet out;
    for (int v = 0; v < h.n(); ++v)
        if (basis.front()[v]) out.push_back(v);
    return out;
}

Verdict is_odd_bruteforce(const Hypergraph& h) {
    if (h.n() > 20) throw CapacityError("is_odd_bruteforce limited to n <= 20");
    auto emasks = edge_masks_small(h);
    uint32_t total = 1u << h.n();
    for (uint32_t s = 1; s < total; ++s) {
        bool all_even = true;
        for (uint32_t em : emasks)
            if (std::popcount(em & s) & 1) { all_even = false; break; }
        if (all_even) return Verdict{false, mask_to_set(s)};
    }
    return Verdict{true, std::nullopt};
}

RedGreenDecomposition red_green(const Hypergraph& h, int l) {
    if (l < 2) throw InputError("red_green: l must be >= 2");
    RedGreenDecomposition d;
    d.l = l;
    d.red_blocks = minimal_dense_sets(h, 2 * l);

    std::vector<int> block_of(h.n(), -1);  // -1 = green, else block index
    for (size_t b = 0; b < d.red_blocks.size(); ++b) {
        for (Vertex v : d.red_blocks[b]) {
            if (block_of[v] >= 0) d.blocks_disjoint = false;
            block_of[v] = static_cast<int>(b);
        }
    }
    for (Vertex v = 0; v < h.n(); ++v)
        if (block_of[v] < 0) d.green.push_back(v);
    d.green_empty = d.green.empty();

    // Disjointness diagnostics via one pass over edges.
    for (const auto& e : h.edges()) {
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                int bi = block_of[e[i]], bj = block_of[e[j]];
                if (bi >= 0 && bj >= 0 && bi != bj) d.adjacent_reds_share = false;
            }
        }
    }
    for (Vertex b = 0; b < h.n(); ++b) {
        if (block_of[b] >= 0) continue;
        std::set<Vertex> red_neighbors;
        for (const auto& e : h.edges()) {
            if (e[0] != b && e[1] != b && e[2] != b) continue;
            for (Vertex v : e)
                if (v != b && block_of[v] >= 0) red_neighbors.insert(v);
        }
        if (red_neighbors.size() > 1) d.green_one_red_neighbor = false;
    }

    if (!d.green_empty) {
        d.green_subhypergraph = induced(h, d.green);
    }
    return d;
}

}  // namespace multipede
