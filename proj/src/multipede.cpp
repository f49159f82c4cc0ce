#include "multipede/multipede.hpp"

#include <algorithm>
#include <bit>

#include "multipede/gf2.hpp"

namespace multipede {

Multipede build_multipede(const Hypergraph& h, std::vector<uint8_t> parity, int level,
                          bool implicit_supersegments, int cap) {
    if (level < 1 || level > 4) throw InputError("build_multipede: level must be 1..4");
    if (parity.size() != static_cast<size_t>(h.edge_count()))
        throw InputError("build_multipede: parity vector size mismatch");
    Multipede m;
    m.seg = h;
    m.parity = std::move(parity);
    for (uint8_t& b : m.parity) b &= 1;
    m.level = level;
    if (level == 4) {
        if (h.n() <= cap) {
            m.supersegments_materialized = true;
        } else if (implicit_supersegments) {
            m.supersegments_materialized = false;
        } else {
            throw CapacityError("build_multipede: super-segment cap exceeded (enable implicit mode)");
        }
    }
    return m;
}

std::vector<std::string> validate(const Multipede& m) {
    std::vector<std::string> out;
    if (m.level < 1 || m.level > 4) out.push_back("level out of range 1..4");
    if (m.parity.size() != static_cast<size_t>(m.seg.edge_count()))
        out.push_back("parity vector size does not match edge count");
    for (uint8_t b : m.parity)
        if (b > 1) out.push_back("parity bit out of range");
    if (m.level == 4 && !m.supersegments_materialized && m.n() <= kSupersegmentCap)
        out.push_back("super-segments not materialized below the cap");
    if (m.level == 4 && m.supersegments_materialized && m.n() > kSupersegmentCap)
        out.push_back("super-segments materialized above the cap");
    // The edge/foot structural clauses (two feet per segment, slave counts,
    // projection) hold by construction here; the relational validator in
    // structure.hpp checks them on explicit structures.
    return out;
}

std::array<Slave, 8> slaves(const Multipede& m, const Edge& h) {
    const auto& es = m.seg.edges();
    auto it = std::lower_bound(es.begin(), es.end(), h);
    if (it == es.end() || *it != h) throw InputError("slaves: unknown segment hyperedge");
    int b = m.parity[it - es.begin()];
    std::array<Slave, 8> out;
    for (int bits = 0; bits < 8; ++bits) {
        Slave s;
        for (int i = 0; i < 3; ++i) s.feet[i] = Foot{h[i], (bits >> i) & 1};
        s.positive = (std::popcount(static_cast<unsigned>(bits)) & 1) == b;
        out[bits] = s;
    }
    return out;
}

Multipede flip_segment_feet(const Multipede& m, Vertex x) {
    if (x < 0 || x >= m.n()) throw InputError("flip_segment_feet: segment out of range");
    Multipede out = m;
    for (int i = 0; i < m.edge_count(); ++i) {
        const Edge& e = m.seg.edges()[i];
        if (e[0] == x || e[1] == x || e[2] == x) out.parity[i] ^= 1;
    }
    return out;
}

Multipede twist(const Multipede& m, const std::vector<int>& edge_indices) {
    Multipede out = m;
    for (int i : edge_indices) {
        if (i < 0 || i >= m.edge_count()) throw InputError("twist: edge index out of range");
        out.parity[i] ^= 1;
    }
    return out;
}

FootSwapIsos foot_swap_isomorphisms(const Multipede& m, const Multipede& n) {
    if (m.seg != n.seg || m.level != n.level)
        throw InputError("foot_swap_isomorphisms: structural mismatch");
    Gf2Matrix a = incidence_matrix(m.seg);
    std::vector<uint8_t> t(m.edge_count());
    for (int i = 0; i < m.edge_count(); ++i) t[i] = m.parity[i] ^ n.parity[i];
    FootSwapIsos out;
    auto to_set = [&](const std::vector<uint8_t>& x) {
        FootMap s;
        for (int v = 0; v < m.n(); ++v)
            if (x[v]) s.push_back(v);
        return s;
    };
    if (auto x = a.solve(t)) out.solution = to_set(*x);
    for (const auto& k : a.kernel()) out.kernel_basis.push_back(to_set(k));
    return out;
}

bool is_rigid(const Multipede& m) {
    if (m.level < 3) throw InputError("is_rigid: requires level >= 3 (ordered segments)");
    return incidence_matrix(m.seg).rank() == m.n();
}

std::vector<FootMap> automorphisms_bruteforce(const Multipede& m) {
    if (m.level < 3) throw InputError("automorphisms_bruteforce: requires level >= 3");
    if (m.n() > 12) throw CapacityError("automorphisms_bruteforce limited to n <= 12");
    std::vector<FootMap> out;
    for (uint32_t mask = 0; mask < (1u << m.n()); ++mask) {
        bool ok = true;
        for (int ei = 0; ei < m.edge_count() && ok; ++ei) {
            const Edge& e = m.seg.edges()[ei];
            for (const Slave& s : slaves(m, e)) {
                // Image slave under the swap-set: flip each foot label whose
                // segment is in the mask, then re-evaluate positivity.
                int sum = 0;
                for (const Foot& f : s.feet)
                    sum ^= f.second ^ ((mask >> f.first) & 1);
                bool image_positive = (sum & 1) == m.parity[ei];
                if (image_positive != s.positive) { ok = false; break; }
            }
        }
        if (!ok) continue;
        FootMap fm;
        for (int v = 0; v < m.n(); ++v)
            if ((mask >> v) & 1) fm.push_back(v);
        out.push_back(std::move(fm));
    }
    return out;
}

std::optional<std::vector<int>> noniso_twist_edges(const Multipede& m) {
    auto left = incidence_matrix(m.seg).left_kernel();
    if (left.empty()) return std::nullopt;
    const auto& u = left.front();
    for (int j = 0; j < m.edge_count(); ++j)
        if (u[j]) return std::vector<int>{j};  // u·e_j = 1, so e_j is off the column space
    return std::nullopt;  // unreachable: basis vectors are nonzero
}

}  // namespace multipede
