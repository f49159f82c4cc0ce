#include "multipede/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace multipede {

bool RelStructure::has_pair(const std::vector<std::pair<int, int>>& rel, int a, int b) const {
    return std::binary_search(rel.begin(), rel.end(), std::make_pair(a, b));
}

bool RelStructure::has_triple(int a, int b, int c) const {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return std::binary_search(triples.begin(), triples.end(), t);
}

void RelStructure::canonicalize() {
    std::sort(foot_of.begin(), foot_of.end());
    std::sort(less.begin(), less.end());
    std::sort(member.begin(), member.end());
    for (auto& t : triples) std::sort(t.begin(), t.end());
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

int foot_id(const Multipede& m, Vertex segment, int label) {
    return m.n() + 2 * segment + label;
}

RelStructure to_structure(const Multipede& m) {
    RelStructure s;
    int n = m.n();
    s.sort.assign(n, RelStructure::kSegment);
    s.sort.insert(s.sort.end(), 2 * n, RelStructure::kFoot);
    for (Vertex v = 0; v < n; ++v) {
        s.foot_of.push_back({foot_id(m, v, 0), v});
        s.foot_of.push_back({foot_id(m, v, 1), v});
    }
    for (int ei = 0; ei < m.edge_count(); ++ei) {
        const Edge& e = m.seg.edges()[ei];
        s.triples.push_back({e[0], e[1], e[2]});
        for (const Slave& sl : slaves(m, e)) {
            if (!sl.positive) continue;
            s.triples.push_back({foot_id(m, sl.feet[0].first, sl.feet[0].second),
                                 foot_id(m, sl.feet[1].first, sl.feet[1].second),
                                 foot_id(m, sl.feet[2].first, sl.feet[2].second)});
        }
    }
    if (m.level >= 3) {
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) s.less.push_back({i, j});
    }
    if (m.level == 4) {
        if (!m.supersegments_materialized)
            throw CapacityError("to_structure: level-4 multipede without materialized super-segments");
        int base = 3 * n;
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            s.sort.push_back(RelStructure::kSuperSegment);
            for (Vertex v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.member.push_back({v, base + static_cast<int>(mask)});
        }
    }
    s.canonicalize();
    return s;
}

std::string describe_element(const RelStructure&, const Multipede& m, int id) {
    std::ostringstream os;
    if (id < m.n()) os << "s" << id;
    else if (id < 3 * m.n()) os << "f" << (id - m.n()) / 2 << "." << (id - m.n()) % 2;
    else os << "S" << (id - 3 * m.n());
    return os.str();
}

std::vector<std::string> validate_structure(const RelStructure& s, int level) {
    std::vector<std::string> out;
    int n_el = s.size();

    std::vector<int> outdeg(n_el, 0), indeg(n_el, 0);
    for (auto [f, seg] : s.foot_of) {
        if (f < 0 || f >= n_el || seg < 0 || seg >= n_el) {
            out.push_back("foot relation references unknown element");
            continue;
        }
        ++outdeg[f];
        ++indeg[seg];
    }
    std::set<int> segments, feet, supers;
    for (int e = 0; e < n_el; ++e) {
        if (outdeg[e] > 0 && indeg[e] > 0)
            out.push_back("element is both a foot and a segment");
        if (s.sort[e] == RelStructure::kSuperSegment) {
            supers.insert(e);
            if (outdeg[e] > 0 || indeg[e] > 0)
                out.push_back("super-segment participates in the foot relation");
            continue;
        }
        if (outdeg[e] > 0) feet.insert(e);
        else segments.insert(e);
    }
    for (int f : feet)
        if (outdeg[f] != 1) out.push_back("foot without exactly one segment");
    for (int seg : segments)
        if (indeg[seg] != 2) out.push_back("segment without exactly two feet");

    std::map<int, int> seg_of;  // foot -> segment
    for (auto [f, seg] : s.foot_of) seg_of[f] = seg;
    std::map<int, std::vector<int>> feet_of;
    for (auto [f, seg] : s.foot_of) feet_of[seg].push_back(f);

    // Hyperedge homogeneity + slave projection.
    std::set<std::array<int, 3>> seg_edges;
    for (const auto& t : s.triples) {
        bool all_seg = true, all_feet = true;
        for (int e : t) {
            if (!segments.count(e)) all_seg = false;
            if (!feet.count(e)) all_feet = false;
        }
        if (all_seg) seg_edges.insert(t);
        else if (!all_feet) out.push_back("hyperedge mixes sorts");
    }
    for (const auto& t : s.triples) {
        bool all_feet = std::all_of(t.begin(), t.end(), [&](int e) { return feet.count(e) > 0; });
        if (!all_feet) continue;
        std::array<int, 3> proj{seg_of[t[0]], seg_of[t[1]], seg_of[t[2]]};
        std::sort(proj.begin(), proj.end());
        if (proj[0] == proj[1] || proj[1] == proj[2] || !seg_edges.count(proj))
            out.push_back("foot hyperedge does not project to a segment hyperedge");
    }

    // Exactly four positive slaves per segment edge, all equivalent.
    if (level >= 2) {
        for (const auto& se : seg_edges) {
            bool complete = true;
            for (int v : se)
                if (feet_of[v].size() != 2) complete = false;
            if (!complete) continue;  // degree violations already reported
            std::vector<std::array<int, 3>> positives;
            for (int b0 = 0; b0 < 2; ++b0)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2) {
                        std::array<int, 3> sl{feet_of[se[0]][b0], feet_of[se[1]][b1],
                                              feet_of[se[2]][b2]};
                        std::sort(sl.begin(), sl.end());
                        if (std::binary_search(s.triples.begin(), s.triples.end(), sl))
                            positives.push_back({b0, b1, b2});
                    }
            if (positives.size() != 4) {
                out.push_back("segment hyperedge without exactly four positive slaves");
                continue;
            }
            int parity = (positives[0][0] + positives[0][1] + positives[0][2]) & 1;
            for (const auto& p : positives)
                if (((p[0] + p[1] + p[2]) & 1) != parity)
                    out.push_back("positive slaves are not a single equivalence class");
        }
    }

    // Linear order on segments.
    if (level >= 3) {
        for (int a : segments) {
            if (s.has_pair(s.less, a, a)) out.push_back("order is not irreflexive");
            for (int b : segments) {
                if (a == b) continue;
                bool ab = s.has_pair(s.less, a, b), ba = s.has_pair(s.less, b, a);
                if (ab == ba) out.push_back("order not total/antisymmetric on segments");
            }
        }
    }

    // Super-segment axioms: empty set, single-element extension,
    // extensionality.
    if (level >= 4) {
        std::map<int, std::set<int>> members;
        for (int ss : supers) members[ss];
        for (auto [seg, ss] : s.member) members[ss].insert(seg);
        bool have_empty = false;
        std::set<std::set<int>> distinct;
        for (auto& [ss, ms] : members) {
            if (ms.empty()) have_empty = true;
            if (!distinct.insert(ms).second)
                out.push_back("two super-segments represent the same segment set");
        }
        if (!have_empty) out.push_back("no empty super-segment");
        for (auto& [ss, ms] : members) {
            for (int x : segments) {
                std::set<int> ext = ms;
                ext.insert(x);
                if (!distinct.count(ext))
                    out.push_back("missing single-element extension of a super-segment");
            }
        }
    }
    return out;
}

bool is_partial_isomorphism(const RelStructure& a, const RelStructure& b,
                            const std::vector<PebblePair>& board) {
    int k = static_cast<int>(board.size());
    for (int i = 0; i < k; ++i) {
        const auto& p = board[i];
        if (p.a < 0 || p.a >= a.size() || p.b < 0 || p.b >= b.size()) return false;
        if (a.sort[p.a] != b.sort[p.b]) return false;
        for (int j = i + 1; j < k; ++j) {
            if ((board[i].a == board[j].a) != (board[i].b == board[j].b)) return false;
        }
    }
    auto pair_ok = [&](const std::vector<std::pair<int, int>>& ra,
                       const std::vector<std::pair<int, int>>& rb) {
        for (const auto& p : board)
            for (const auto& q : board)
                if (a.has_pair(ra, p.a, q.a) != b.has_pair(rb, p.b, q.b)) return false;
        return true;
    };
    if (!pair_ok(a.foot_of, b.foot_of)) return false;
    if (!pair_ok(a.less, b.less)) return false;
    if (!pair_ok(a.member, b.member)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                if (a.has_triple(board[i].a, board[j].a, board[l].a) !=
                    b.has_triple(board[i].b, board[j].b, board[l].b))
                    return false;
    return true;
}

}  // namespace multipede
