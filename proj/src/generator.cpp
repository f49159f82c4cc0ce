#include "multipede/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace multipede {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t attempt_seed(uint64_t seed, uint64_t t) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
}

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int64_t choose3(int64_t n) { return n * (n - 1) * (n - 2) / 6; }

// Index -> triple in lexicographic order of sorted triples.
// Linear scan over the first coordinate; n is a few hundred at most.
Edge unrank_triple(int n, int64_t idx) {
    int a;
    for (a = 0; a < n - 2; ++a) {
        int64_t block = static_cast<int64_t>(n - a - 1) * (n - a - 2) / 2;
        if (idx < block) break;
        idx -= block;
    }
    int b;
    for (b = a + 1; b < n - 1; ++b) {
        int64_t block = n - b - 1;
        if (idx < block) break;
        idx -= block;
    }
    int c = b + 1 + static_cast<int>(idx);
    return Edge{a, b, c};
}

}  // namespace

Hypergraph sample_binomial(int n, double eps, uint64_t seed) {
    if (n < 4) throw InputError("sample_binomial: n must be >= 4");
    if (eps <= 0 || eps >= 1) throw InputError("sample_binomial: eps must be in (0,1)");
    double p = std::pow(static_cast<double>(n), -2.0 + eps);
    if (p >= 1.0) throw InputError("sample_binomial: inclusion probability >= 1");
    if (choose3(n) > 200'000'000LL) throw CapacityError("sample_binomial: triple space too large");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (unit_double(rng) < p) edges.push_back({a, b, c});
    return Hypergraph(n, std::move(edges));
}

Hypergraph sample_fixed(int n, int m, uint64_t seed) {
    if (n < 3) throw InputError("sample_fixed: n must be >= 3");
    int64_t total = choose3(n);
    if (m < 0 || m > total) throw InputError("sample_fixed: m exceeds triple count");
    if (total > 200'000'000LL) throw CapacityError("sample_fixed: triple space too large");
    std::mt19937_64 rng(seed);
    std::set<int64_t> picked;
    if (m > total / 2) {
        // Dense request: shuffle the full index range.
        std::vector<int64_t> all(total);
        for (int64_t i = 0; i < total; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        picked.insert(all.begin(), all.begin() + m);
    } else {
        while (static_cast<int>(picked.size()) < m)
            picked.insert(static_cast<int64_t>(unit_double(rng) * total));
    }
    std::vector<Edge> edges;
    for (int64_t idx : picked) edges.push_back(unrank_triple(n, idx));
    return Hypergraph(n, std::move(edges));
}

Hypergraph circulant(int n, const std::array<int, 3>& base) {
    if (n < 3) throw InputError("circulant: n must be >= 3");
    auto norm = [n](int r) { return ((r % n) + n) % n; };
    std::set<int> residues{norm(base[0]), norm(base[1]), norm(base[2])};
    if (residues.size() != 3) throw InputError("circulant: base residues collide mod n");
    std::set<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.insert(make_edge(norm(base[0] + i), norm(base[1] + i), norm(base[2] + i)));
    return Hypergraph(n, {edges.begin(), edges.end()});
}

Refined refine_to_green(const Hypergraph& h, int l, bool prune_uncovered) {
    RedGreenDecomposition rg = red_green(h, l);
    Refined r;
    r.red_removed = h.n() - static_cast<int>(rg.green.size());
    if (rg.green_empty) {
        r.empty = true;
        return r;
    }
    VertexSet keep = rg.green;
    Induced ind = induced(h, keep);
    if (prune_uncovered) {
        for (;;) {
            std::vector<int> deg(ind.sub.n(), 0);
            for (const auto& e : ind.sub.edges())
                for (Vertex v : e) ++deg[v];
            VertexSet covered;
            for (Vertex v = 0; v < ind.sub.n(); ++v)
                if (deg[v] > 0) covered.push_back(v);
            if (static_cast<int>(covered.size()) == ind.sub.n()) break;
            r.uncovered_removed += ind.sub.n() - static_cast<int>(covered.size());
            if (covered.empty()) {
                r.empty = true;
                return r;
            }
            Induced next = induced(ind.sub, covered);
            // Compose relabeling maps.
            std::vector<Vertex> to_parent(next.sub.n());
            for (int i = 0; i < next.sub.n(); ++i)
                to_parent[i] = ind.to_parent[next.to_parent[i]];
            ind = Induced{next.sub, std::move(to_parent)};
        }
    }
    r.graph = ind.sub;
    r.to_parent = ind.to_parent;
    r.empty = r.graph.n() == 0;
    return r;
}

GenResult generate_odd_meager(const GenConfig& cfg) {
    if (cfg.l < 2) throw InputError("generate: l must be >= 2");
    if (cfg.min_size < 1) throw InputError("generate: min size must be >= 1");
    GenConfig c = cfg;
    if (c.n == 0) c.n = std::max(2 * c.min_size, 48);
    if (c.model == GenModel::Binomial && !c.override_eps_bound) {
        double bound = 1.0 / (2 * c.l + 3);
        if (!(c.eps > 0 && c.eps < bound))
            throw InputError("generate: eps outside (0, 1/(2l+3)); use override to force");
    }
    if (c.model == GenModel::Binomial && c.n < 2 * c.min_size)
        throw InputError("generate: n must be >= 2N for binomial model");

    GenResult result;
    result.report.config = c;
    for (int t = 0; t < c.max_attempts; ++t) {
        AttemptStats st;
        st.seed = attempt_seed(c.seed, static_cast<uint64_t>(t));
        Hypergraph h;
        switch (c.model) {
            case GenModel::Binomial: h = sample_binomial(c.n, c.eps, st.seed); break;
            case GenModel::FixedEdges: h = sample_fixed(c.n, c.m, st.seed); break;
            case GenModel::Circulant: h = circulant(c.n, c.base); break;
        }
        st.edge_count = h.edge_count();

        Refined ref = refine_to_green(h, c.l, c.prune_uncovered);
        st.red_vertices = ref.red_removed;
        st.red_fraction_of_quarter =
            h.n() > 0 ? static_cast<double>(ref.red_removed) / (h.n() / 4.0) : 0.0;

        // Coverage monitoring: sampled large sets containing a hyperedge.
        {
            std::mt19937_64 mon(splitmix64(st.seed ^ 0x6d6f6e69746f72ULL));
            int want = (h.n() + 3) / 4;
            for (int s = 0; s < 20; ++s) {
                std::vector<Vertex> all(h.n());
                for (int v = 0; v < h.n(); ++v) all[v] = v;
                std::shuffle(all.begin(), all.end(), mon);
                all.resize(want);
                VertexSet x = make_vertex_set(std::move(all));
                ++st.coverage_samples;
                if (!x.empty() && weight(h, x) > 0) ++st.coverage_hits;
            }
        }

        if (!ref.empty) {
            st.green_size = ref.graph.n();
            st.green_edges = ref.graph.edge_count();
            // Emission gate: the hypergraph module's independent checkers.
            st.odd = is_odd(ref.graph);
            st.meager = is_meager(ref.graph, c.l).ok;
            st.success = st.odd && st.meager && ref.graph.n() >= c.min_size;
        }
        result.report.attempts.push_back(st);
        if (st.success) {
            result.graph = ref.graph;
            result.report.success = true;
            result.report.success_attempt = t;
            return result;
        }
    }
    return result;
}

std::string format_report(const GenReport& rep) {
    std::ostringstream os;
    const GenConfig& c = rep.config;
    const char* model = c.model == GenModel::Binomial ? "binomial"
                        : c.model == GenModel::FixedEdges ? "fixed" : "circulant";
    os << "model=" << model << "\n"
       << "l=" << c.l << "\n"
       << "min_size=" << c.min_size << "\n"
       << "n=" << c.n << "\n"
       << "eps=" << c.eps << "\n"
       << "m=" << c.m << "\n"
       << "seed=" << c.seed << "\n"
       << "max_attempts=" << c.max_attempts << "\n"
       << "prune_uncovered=" << (c.prune_uncovered ? 1 : 0) << "\n"
       << "attempts_used=" << rep.attempts.size() << "\n"
       << "success=" << (rep.success ? 1 : 0) << "\n"
       << "success_attempt=" << rep.success_attempt << "\n";
    for (size_t i = 0; i < rep.attempts.size(); ++i) {
        const AttemptStats& a = rep.attempts[i];
        os << "attempt." << i << ".seed=" << a.seed
           << " edges=" << a.edge_count
           << " red=" << a.red_vertices
           << " green=" << a.green_size
           << " green_edges=" << a.green_edges
           << " odd=" << (a.odd ? 1 : 0)
           << " meager=" << (a.meager ? 1 : 0)
           << " red_quarter_fraction=" << a.red_fraction_of_quarter
           << " coverage=" << a.coverage_hits << "/" << a.coverage_samples
           << " success=" << (a.success ? 1 : 0) << "\n";
    }
    return os.str();
}

}  // namespace multipede
