#include "multipede/hypergraph.hpp"

#include <algorithm>
#include <ostream>

namespace multipede {

Edge make_edge(Vertex a, Vertex b, Vertex c) {
    Edge e{a, b, c};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
        throw InputError("edge vertices must be distinct");
    return e;
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("negative vertex count");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2])
            throw InputError("edge vertices must be distinct");
        if (e[0] < 0 || e[2] >= n_)
            throw InputError("edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
}

bool Hypergraph::has_edge(Vertex a, Vertex b, Vertex c) const {
    Edge e = make_edge(a, b, c);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Edge> Hypergraph::edges_at(Vertex v) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (e[0] == v || e[1] == v || e[2] == v) out.push_back(e);
    return out;
}

void check_vertex_set(const Hypergraph& h, const VertexSet& x) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= h.n()) throw InputError("vertex out of range");
        if (i > 0 && x[i] <= x[i - 1]) throw InputError("vertex set not sorted/unique");
    }
}

namespace {
bool contains(const VertexSet& x, Vertex v) {
    return std::binary_search(x.begin(), x.end(), v);
}
}  // namespace

int weight(const Hypergraph& h, const VertexSet& x) {
    check_vertex_set(h, x);
    int w = 0;
    for (const auto& e : h.edges())
        if (contains(x, e[0]) && contains(x, e[1]) && contains(x, e[2])) ++w;
    return w;
}

Induced induced(const Hypergraph& h, const VertexSet& x) {
    check_vertex_set(h, x);
    if (x.empty()) throw InputError("induced: empty vertex set");
    std::vector<int> idx(h.n(), -1);
    for (size_t i = 0; i < x.size(); ++i) idx[x[i]] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (const auto& e : h.edges())
        if (idx[e[0]] >= 0 && idx[e[1]] >= 0 && idx[e[2]] >= 0)
            sub.push_back({idx[e[0]], idx[e[1]], idx[e[2]]});
    return Induced{Hypergraph(static_cast<int>(x.size()), std::move(sub)), x};
}

VertexSet witnesses(const Hypergraph& h, Vertex x, Vertex y) {
    if (x == y) throw InputError("witnesses: x == y");
    if (x < 0 || x >= h.n() || y < 0 || y >= h.n()) throw InputError("vertex out of range");
    VertexSet out;
    for (const auto& e : h.edges()) {
        bool hx = e[0] == x || e[1] == x || e[2] == x;
        bool hy = e[0] == y || e[1] == y || e[2] == y;
        if (hx && hy)
            for (Vertex v : e)
                if (v != x && v != y) out.push_back(v);
    }
    return make_vertex_set(std::move(out));
}

bool adjacent(const Hypergraph& h, Vertex x, Vertex y) {
    return !witnesses(h, x, y).empty();
}

std::ostream& operator<<(std::ostream& os, const Hypergraph& h) {
    os << "hg(n=" << h.n() << ", m=" << h.edge_count() << ")";
    return os;
}

}  // namespace multipede
