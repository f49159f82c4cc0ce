#include "multipede/closure.hpp"

#include <algorithm>

namespace multipede {

namespace {
bool contains(const VertexSet& x, Vertex v) {
    return std::binary_search(x.begin(), x.end(), v);
}
void insert(VertexSet& x, Vertex v) {
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
}
}  // namespace

bool attracts(const Hypergraph& h, const VertexSet& x, Vertex y) {
    if (contains(x, y)) return false;
    for (const auto& e : h.edges()) {
        int in = 0;
        bool has_y = false;
        for (Vertex v : e) {
            if (v == y) has_y = true;
            else if (contains(x, v)) ++in;
        }
        if (has_y && in == 2) return true;
    }
    return false;
}

bool is_closed(const Hypergraph& h, const VertexSet& x) {
    for (const auto& e : h.edges()) {
        int in = 0;
        for (Vertex v : e)
            if (contains(x, v)) ++in;
        if (in == 2) return false;
    }
    return true;
}

VertexSet closure(const Hypergraph& h, const VertexSet& x) {
    check_vertex_set(h, x);
    if (x.empty()) throw InputError("closure: empty vertex set");
    VertexSet cur = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : h.edges()) {
            int in = 0;
            Vertex out = -1;
            for (Vertex v : e) {
                if (contains(cur, v)) ++in;
                else out = v;
            }
            if (in == 2) {
                insert(cur, out);
                changed = true;
            }
        }
    }
    return cur;
}

std::vector<Vertex> attraction_order(const Hypergraph& h, const VertexSet& y) {
    check_vertex_set(h, y);
    if (y.empty()) throw InputError("attraction_order: empty vertex set");
    VertexSet cl = closure(h, y);
    VertexSet cur = y;
    std::vector<Vertex> order;
    while (cur.size() < cl.size()) {
        Vertex next = -1;
        for (Vertex z : cl) {
            if (contains(cur, z)) continue;
            if (attracts(h, cur, z)) { next = z; break; }  // lowest index first
        }
        if (next < 0)
            throw IntegrityError("attraction_order: closure element never attracted");
        order.push_back(next);
        insert(cur, next);
    }
    return order;
}

UniqueWitnessOrder unique_witness_order(const Hypergraph& h, const VertexSet& x, Vertex z0) {
    check_vertex_set(h, x);
    if (x.empty()) throw InputError("unique_witness_order: empty vertex set");
    if (z0 < 0 || z0 >= h.n()) throw InputError("unique_witness_order: z0 out of range");
    VertexSet xbar = closure(h, x);
    if (contains(xbar, z0)) throw InputError("unique_witness_order: z0 in closure(X)");
    VertexSet y = xbar;
    insert(y, z0);
    VertexSet z = closure(h, y);

    UniqueWitnessOrder result;
    VertexSet cur = y;
    while (cur.size() < z.size()) {
        Vertex next = -1;
        for (Vertex v : z) {
            if (contains(cur, v)) continue;
            if (attracts(h, cur, v)) { next = v; break; }
        }
        if (next < 0)
            throw IntegrityError("unique_witness_order: closure element never attracted");
        std::vector<Edge> hits;
        for (const auto& e : h.edges()) {
            int in = 0;
            bool has_next = false;
            for (Vertex v : e) {
                if (v == next) has_next = true;
                else if (contains(cur, v)) ++in;
            }
            if (has_next && in == 2) hits.push_back(e);
        }
        if (hits.size() > 1) {
            // Two witnesses build a dense set, contradicting 2k-meagerness.
            std::vector<Vertex> vs;
            for (const auto& e : result.witnesses)
                vs.insert(vs.end(), e.begin(), e.end());
            vs.insert(vs.end(), hits[0].begin(), hits[0].end());
            vs.insert(vs.end(), hits[1].begin(), hits[1].end());
            throw UniqueWitnessError("unique_witness_order: non-unique witness",
                                     make_vertex_set(std::move(vs)));
        }
        result.order.push_back(next);
        result.witnesses.push_back(hits.front());
        insert(cur, next);
    }
    return result;
}

}  // namespace multipede
