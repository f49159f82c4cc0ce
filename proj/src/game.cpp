#include "multipede/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "multipede/closure.hpp"
#include "multipede/gf2.hpp"

namespace multipede {

GameState::GameState(const RelStructure& sa, const RelStructure& sb, int pebbles)
    : a(&sa), b(&sb), k(pebbles), board(pebbles) {
    if (pebbles < 1) throw InputError("game: k must be >= 1");
}

std::vector<PebblePair> GameState::pairs() const {
    std::vector<PebblePair> out;
    for (int i = 0; i < k; ++i)
        if (board[i]) out.push_back({i + 1, board[i]->first, board[i]->second});
    return out;
}

namespace {

void validate_move(const GameState& st, const SpoilerMove& mv) {
    if (mv.pebble < 1 || mv.pebble > st.k) throw InputError("move: pebble index out of range");
    if (mv.side != 0 && mv.side != 1) throw InputError("move: bad side");
    if (mv.set.empty()) throw InputError("move: X must be nonempty");
    const RelStructure* side = mv.side == 0 ? st.a : st.b;
    std::set<int> seen;
    for (int e : mv.set) {
        if (e < 0 || e >= side->size()) throw InputError("move: element out of range");
        if (!seen.insert(e).second) throw InputError("move: duplicate element in X");
    }
}

}  // namespace

RoundOutcome play_round(GameState& st, const SpoilerMove& mv, DuplicatorStrategy& dup,
                        SpoilerStrategy& spoiler) {
    if (st.status != GameState::kOngoing) throw InputError("play_round: game is over");
    validate_move(st, mv);
    st.board[mv.pebble - 1].reset();

    RoundOutcome out;
    const RelStructure* other = mv.side == 0 ? st.b : st.a;
    if (static_cast<int>(mv.set.size()) > other->size()) {
        st.status = GameState::kSpoilerWon;
        out.failure = RoundOutcome::kStep2;
        return out;
    }
    auto y = dup.choose_set(st, mv);
    bool y_valid = y.has_value() && y->size() == mv.set.size();
    if (y_valid) {
        std::set<int> seen;
        for (int e : *y)
            if (e < 0 || e >= other->size() || !seen.insert(e).second) y_valid = false;
    }
    if (!y_valid) {
        st.status = GameState::kSpoilerWon;
        out.failure = y ? RoundOutcome::kStep2 : RoundOutcome::kStrategyConceded;
        return out;
    }
    out.y_set = *y;

    int pinned = spoiler.pin(st, mv, *y);
    if (std::find(y->begin(), y->end(), pinned) == y->end())
        throw InputError("pin: element not in Y");
    out.pinned = pinned;

    auto x = dup.answer(st, mv, *y, pinned);
    bool x_valid = x.has_value() && std::find(mv.set.begin(), mv.set.end(), *x) != mv.set.end();
    if (x_valid) {
        auto pair = mv.side == 0 ? std::make_pair(*x, pinned) : std::make_pair(pinned, *x);
        st.board[mv.pebble - 1] = pair;
        x_valid = is_partial_isomorphism(*st.a, *st.b, st.pairs());
        if (!x_valid) st.board[mv.pebble - 1].reset();
    }
    if (!x_valid) {
        st.status = GameState::kSpoilerWon;
        out.failure = x ? RoundOutcome::kStep4 : RoundOutcome::kStrategyConceded;
        return out;
    }
    out.matched = *x;
    out.duplicator_won = true;
    ++st.round;
    return out;
}

int RegularExtension::apply(const Multipede& m, int id) const {
    if (id < m.n() || id >= 3 * m.n()) return id;  // segments and super-segments fixed
    int seg = (id - m.n()) / 2, label = (id - m.n()) % 2;
    auto it = swap.find(seg);
    if (it == swap.end()) return id;
    return foot_id(m, seg, label ^ it->second);
}

std::optional<RegularExtension> regular_extension(const Multipede& m, const Multipede& n,
                                                  const std::vector<PebblePair>& alpha) {
    if (m.seg != n.seg || m.level != n.level)
        throw InputError("regular_extension: structural mismatch");
    int nn = m.n();
    RegularExtension ext;
    std::map<Vertex, int> fixed;  // segment -> swap bit forced by alpha's feet
    std::vector<Vertex> dom;
    for (const auto& p : alpha) {
        if (p.a < nn) {
            // Segment pebble: regular maps require identity.
            if (p.b != p.a) throw InputError("regular_extension: alpha moves a segment");
            dom.push_back(p.a);
        } else if (p.a < 3 * nn) {
            int seg = (p.a - nn) / 2, la = (p.a - nn) % 2;
            if (p.b < nn || p.b >= 3 * nn || (p.b - nn) / 2 != seg)
                throw InputError("regular_extension: alpha maps a foot off its segment");
            int lb = (p.b - nn) % 2;
            auto [it, inserted] = fixed.emplace(seg, la ^ lb);
            if (!inserted && it->second != (la ^ lb)) return std::nullopt;  // not injective
            dom.push_back(seg);
        } else {
            // Super-segments are handled by the identity outside alpha.
            if (p.b != p.a) throw InputError("regular_extension: alpha moves a super-segment");
        }
    }
    ext.domain_segments = make_vertex_set(std::move(dom));
    if (ext.domain_segments.empty()) return ext;  // empty map, trivially safe
    ext.closed_segments = closure(m.seg, ext.domain_segments);

    // Swap bits on the closure solve, over GF(2), one parity equation per
    // hyperedge inside the closure plus one pin per alpha-fixed bit.
    std::vector<Vertex> cols(ext.closed_segments);
    auto col_of = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), v) - cols.begin());
    };
    std::vector<std::pair<std::vector<int>, uint8_t>> eqs;
    for (int ei = 0; ei < m.edge_count(); ++ei) {
        const Edge& e = m.seg.edges()[ei];
        bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) {
            return std::binary_search(cols.begin(), cols.end(), v);
        });
        if (inside)
            eqs.push_back({{col_of(e[0]), col_of(e[1]), col_of(e[2])},
                           static_cast<uint8_t>(m.parity[ei] ^ n.parity[ei])});
    }
    for (auto [seg, bit] : fixed) eqs.push_back({{col_of(seg)}, static_cast<uint8_t>(bit)});

    Gf2Matrix sys(static_cast<int>(eqs.size()), static_cast<int>(cols.size()));
    std::vector<uint8_t> rhs(eqs.size());
    for (size_t r = 0; r < eqs.size(); ++r) {
        for (int c : eqs[r].first) sys.flip(static_cast<int>(r), c);
        rhs[r] = eqs[r].second;
    }
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    for (size_t c = 0; c < cols.size(); ++c) ext.swap[cols[c]] = (*sol)[c];
    return ext;
}

SafeDuplicator::SafeDuplicator(const Multipede& m, const Multipede& n) : m_(m), n_(n) {}

std::optional<int> SafeDuplicator::map_element(const GameState& st, int id, bool) {
    // f: the regular extension over the closure of the pebbled domain,
    // identity elsewhere. The swap map is an involution, so f works in both
    // directions and f^{-1} = f on element ids.
    try {
        auto ext = regular_extension(m_, n_, st.pairs());
        if (!ext) return std::nullopt;  // outside the guaranteed regime
        return ext->apply(m_, id);
    } catch (const InputError&) {
        return std::nullopt;  // board no longer regular; best-effort concedes
    }
}

std::optional<std::vector<int>> SafeDuplicator::choose_set(const GameState& st,
                                                           const SpoilerMove& mv) {
    std::vector<int> y;
    for (int e : mv.set) {
        auto img = map_element(st, e, mv.side == 0);
        if (!img) return std::nullopt;
        y.push_back(*img);
    }
    return y;
}

std::optional<int> SafeDuplicator::answer(const GameState& st, const SpoilerMove&,
                                          const std::vector<int>&, int pinned) {
    return map_element(st, pinned, false);
}

std::optional<std::vector<int>> IdentityDuplicator::choose_set(const GameState&,
                                                               const SpoilerMove& mv) {
    return mv.set;
}

std::optional<int> IdentityDuplicator::answer(const GameState&, const SpoilerMove&,
                                              const std::vector<int>&, int pinned) {
    return pinned;
}

RandomSpoiler::RandomSpoiler(uint64_t seed, int max_set) : rng_(seed), max_set_(max_set) {}

SpoilerMove RandomSpoiler::choose_move(const GameState& st) {
    SpoilerMove mv;
    mv.pebble = 1 + static_cast<int>(rng_() % st.k);
    mv.side = static_cast<int>(rng_() % 2);
    const RelStructure* side = mv.side == 0 ? st.a : st.b;
    int cap = std::min(max_set_, side->size());
    int size = 1 + static_cast<int>(rng_() % cap);
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < size)
        chosen.insert(static_cast<int>(rng_() % side->size()));
    mv.set.assign(chosen.begin(), chosen.end());
    return mv;
}

int RandomSpoiler::pin(const GameState&, const SpoilerMove&, const std::vector<int>& y_set) {
    return y_set[rng_() % y_set.size()];
}

GreedySpoiler::GreedySpoiler(const Multipede& m, const Multipede& n, uint64_t seed)
    : m_(m), n_(n), rng_(seed) {}

SpoilerMove GreedySpoiler::choose_move(const GameState& st) {
    SpoilerMove mv;
    mv.pebble = 1 + st.round % st.k;  // rotate through pebbles
    mv.side = 0;
    int nn = m_.n();
    // Segments touched by pebbles on the A side.
    VertexSet pebbled;
    for (const auto& p : st.pairs()) {
        if (p.a < nn) pebbled.push_back(p.a);
        else if (p.a < 3 * nn) pebbled.push_back((p.a - nn) / 2);
    }
    pebbled = make_vertex_set(std::move(pebbled));
    // First choice: a positive slave of an edge meeting a pebbled segment.
    for (int ei = 0; ei < m_.edge_count(); ++ei) {
        const Edge& e = m_.seg.edges()[ei];
        bool touches = std::any_of(e.begin(), e.end(), [&](Vertex v) {
            return std::binary_search(pebbled.begin(), pebbled.end(), v);
        });
        if (!touches) continue;
        for (const Slave& s : slaves(m_, e)) {
            if (!s.positive) continue;
            for (const Foot& f : s.feet) mv.set.push_back(foot_id(m_, f.first, f.second));
            std::sort(mv.set.begin(), mv.set.end());
            return mv;
        }
    }
    // Next: feet of a segment just outside the closure of the pebbled set.
    if (!pebbled.empty()) {
        VertexSet cl = closure(m_.seg, pebbled);
        for (Vertex z = 0; z < nn; ++z) {
            if (std::binary_search(cl.begin(), cl.end(), z)) continue;
            if (attracts(m_.seg, cl, z)) {
                mv.set = {foot_id(m_, z, 0), foot_id(m_, z, 1)};
                return mv;
            }
        }
    }
    // Fallback: both feet of a seeded segment.
    Vertex z = static_cast<Vertex>(rng_() % nn);
    mv.set = {foot_id(m_, z, 0), foot_id(m_, z, 1)};
    return mv;
}

int GreedySpoiler::pin(const GameState&, const SpoilerMove&, const std::vector<int>& y_set) {
    return y_set[rng_() % y_set.size()];
}

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::ostringstream os;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ",";
        os << ids[i];
    }
    return os.str();
}

}  // namespace

Transcript run_match(const RelStructure& a, const RelStructure& b, int k, int rounds,
                     SpoilerStrategy& spoiler, DuplicatorStrategy& dup) {
    GameState st(a, b, k);
    Transcript t;
    for (int r = 0; r < rounds && st.status == GameState::kOngoing; ++r) {
        SpoilerMove mv = spoiler.choose_move(st);
        std::ostringstream line;
        line << "round " << r << " spoiler i=" << mv.pebble
             << " side=" << (mv.side == 0 ? "M" : "N") << " X=" << join_ids(mv.set);
        t.lines.push_back(line.str());
        RoundOutcome out = play_round(st, mv, dup, spoiler);
        if (out.failure == RoundOutcome::kStrategyConceded) ++t.strategy_failures;
        if (!out.y_set.empty()) t.lines.push_back("dup Y=" + join_ids(out.y_set));
        if (out.pinned >= 0) t.lines.push_back("pin y=" + std::to_string(out.pinned));
        if (out.matched >= 0) t.lines.push_back("match x=" + std::to_string(out.matched));
        ++t.rounds_played;
    }
    if (st.status == GameState::kOngoing) st.status = GameState::kDuplicatorSurviving;
    t.status = st.status;
    t.lines.push_back(std::string("result ") + (t.status == GameState::kDuplicatorSurviving
                                                    ? "duplicator_surviving"
                                                    : "spoiler_won"));
    return t;
}

}  // namespace multipede
