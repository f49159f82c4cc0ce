#include "multipede/cycles.hpp"

#include <algorithm>
#include <set>

namespace multipede {

namespace {

bool all_distinct(const std::vector<Vertex>& seq) {
    std::set<Vertex> s(seq.begin(), seq.end());
    return s.size() == seq.size();
}

}  // namespace

bool is_weak_cycle(const Hypergraph& h, const std::vector<Vertex>& seq) {
    int k = static_cast<int>(seq.size());
    if (k < 3 || !all_distinct(seq)) return false;
    for (Vertex v : seq)
        if (v < 0 || v >= h.n()) return false;
    for (int i = 0; i < k; ++i)
        if (!adjacent(h, seq[i], seq[(i + 1) % k])) return false;
    if (k == 3 && h.has_edge(seq[0], seq[1], seq[2])) return false;
    return true;
}

bool is_cycle(const Hypergraph& h, const std::vector<Vertex>& seq) {
    int k = static_cast<int>(seq.size());
    if (k == 2) {
        if (seq[0] == seq[1]) return false;
        return witnesses(h, seq[0], seq[1]).size() >= 2;
    }
    if (!is_weak_cycle(h, seq)) return false;
    for (int i = 0; i < k; ++i)
        if (h.has_edge(seq[i], seq[(i + 1) % k], seq[(i + 2) % k])) return false;
    return true;
}

bool is_witnessed_cycle(const Hypergraph& h, const WitnessedCycle& wc) {
    int k = wc.length();
    if (k < 2 || static_cast<int>(wc.ys.size()) != k) return false;
    std::vector<Vertex> all(wc.xs);
    all.insert(all.end(), wc.ys.begin(), wc.ys.end());
    if (!all_distinct(all)) return false;
    if (k == 2) {
        return h.has_edge(wc.xs[0], wc.xs[1], wc.ys[0]) &&
               h.has_edge(wc.xs[0], wc.xs[1], wc.ys[1]);
    }
    if (!is_cycle(h, wc.xs)) return false;
    for (int i = 0; i < k; ++i)
        if (!h.has_edge(wc.xs[i], wc.xs[(i + 1) % k], wc.ys[i])) return false;
    return true;
}

VertexSet cycle_vertex_set(const WitnessedCycle& wc) {
    std::vector<Vertex> all(wc.xs);
    all.insert(all.end(), wc.ys.begin(), wc.ys.end());
    return make_vertex_set(std::move(all));
}

namespace {

// Lexicographically least among the 2k rotation/reflection variants.
WitnessedCycle canonical(const WitnessedCycle& wc) {
    int k = wc.length();
    WitnessedCycle best = wc;
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<Vertex> xs = wc.xs, ys = wc.ys;
        if (refl) {
            // Reversed orientation: pair (xs'[i], xs'[i+1]) is the original
            // pair index (k-i-1) mod k, so witnesses permute accordingly.
            std::vector<Vertex> rx(k), ry(k);
            for (int i = 0; i < k; ++i) {
                rx[i] = wc.xs[(k - i) % k];
                ry[i] = wc.ys[(k - i - 1 + k) % k];
            }
            xs = rx;
            ys = ry;
        }
        for (int r = 0; r < k; ++r) {
            WitnessedCycle cand;
            cand.xs.resize(k);
            cand.ys.resize(k);
            for (int i = 0; i < k; ++i) {
                cand.xs[i] = xs[(i + r) % k];
                cand.ys[i] = ys[(i + r) % k];
            }
            if (cand < best) best = cand;
        }
    }
    return best;
}

}  // namespace

std::vector<WitnessedCycle> find_witnessed_cycles(const Hypergraph& h, int max_len) {
    if (max_len < 2) throw InputError("find_witnessed_cycles: max_len must be >= 2");
    std::set<WitnessedCycle> out;

    // Length 2: any pair with two distinct witnesses.
    for (Vertex a = 0; a < h.n(); ++a) {
        for (Vertex b = a + 1; b < h.n(); ++b) {
            VertexSet ws = witnesses(h, a, b);
            for (size_t i = 0; i < ws.size(); ++i)
                for (size_t j = i + 1; j < ws.size(); ++j)
                    out.insert(WitnessedCycle{{a, b}, {ws[i], ws[j]}});
        }
    }

    // Length k >= 3: DFS over vertex sequences, then all distinct witness
    // assignments.
    for (int k = 3; k <= max_len; ++k) {
        std::vector<Vertex> xs;
        auto assign_witnesses = [&](auto&& self, const std::vector<Vertex>& seq,
                                    std::vector<Vertex>& ys, std::set<Vertex>& used) -> void {
            int i = static_cast<int>(ys.size());
            if (i == k) {
                out.insert(canonical(WitnessedCycle{seq, ys}));
                return;
            }
            for (Vertex w : witnesses(h, seq[i], seq[(i + 1) % k])) {
                if (used.count(w)) continue;
                used.insert(w);
                ys.push_back(w);
                self(self, seq, ys, used);
                ys.pop_back();
                used.erase(w);
            }
        };
        auto dfs = [&](auto&& self) -> void {
            int i = static_cast<int>(xs.size());
            if (i == k) {
                if (!is_cycle(h, xs)) return;
                std::vector<Vertex> ys;
                std::set<Vertex> used(xs.begin(), xs.end());
                assign_witnesses(assign_witnesses, xs, ys, used);
                return;
            }
            for (Vertex v = 0; v < h.n(); ++v) {
                if (std::find(xs.begin(), xs.end(), v) != xs.end()) continue;
                if (i > 0 && !adjacent(h, xs[i - 1], v)) continue;
                if (i >= 2 && h.has_edge(xs[i - 2], xs[i - 1], v)) continue;
                xs.push_back(v);
                self(self);
                xs.pop_back();
            }
        };
        dfs(dfs);
    }
    return {out.begin(), out.end()};
}

std::vector<Vertex> cycle_from_weak_cycle(const Hypergraph& h, std::vector<Vertex> seq) {
    if (!is_weak_cycle(h, seq)) throw InputError("cycle_from_weak_cycle: input is not a weak cycle");
    for (;;) {
        int k = static_cast<int>(seq.size());
        int bad = -1;
        for (int i = 0; i < k; ++i) {
            if (h.has_edge(seq[i], seq[(i + 1) % k], seq[(i + 2) % k])) { bad = i; break; }
        }
        if (bad < 0) return seq;  // cycle predicate holds (k=3 weak cycles qualify)
        if (k == 4) {
            Vertex a = seq[bad], b = seq[(bad + 2) % 4];
            Vertex w2 = seq[(bad + 3) % 4];
            if (h.has_edge(a, b, w2)) return {std::min(a, b), std::max(a, b)};
        }
        seq.erase(seq.begin() + (bad + 1) % k);
    }
}

}  // namespace multipede
