#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "multipede/cycles.hpp"
#include "multipede/density.hpp"

using namespace multipede;

TEST_CASE("weak cycle predicate on c9") {
    Hypergraph h = fixtures::c9();
    // 0-2 via {0,2,8}, 2-3 via {2,3,5}, 3-0 via {0,1,3}; (0,2,3) not an edge.
    CHECK(is_weak_cycle(h, {0, 2, 3}));
    CHECK_FALSE(is_weak_cycle(h, {0, 1, 3}));   // the triple is an edge
    CHECK_FALSE(is_weak_cycle(h, {0, 2, 5}));   // 0-5 not adjacent
    CHECK_FALSE(is_weak_cycle(h, {0, 2}));      // too short
    CHECK_FALSE(is_weak_cycle(h, {0, 2, 3, 0}));  // repeated vertex
}

TEST_CASE("cycle predicate handles both arities") {
    Hypergraph h = fixtures::c9();
    CHECK(is_cycle(h, {0, 2, 3}));
    // Length 4 with a consecutive-triple edge is a weak cycle, not a cycle:
    // (8,0,1,7): triple (8,0,1)? {0,1,8} is not an edge; (0,1,7)? no; check a
    // genuine one instead via the witnessed enumeration below.
    Hypergraph w4 = fixtures::w4();
    CHECK(is_cycle(w4, {0, 1}));        // witnesses 2 and 3
    CHECK_FALSE(is_cycle(w4, {0, 2}));  // single witness only
    CHECK_FALSE(is_cycle(h, {0, 2}));   // single witness 8
}

TEST_CASE("witnessed cycle validation") {
    Hypergraph h = fixtures::c9();
    CHECK(is_witnessed_cycle(h, {{0, 1, 2}, {3, 4, 8}}));
    CHECK_FALSE(is_witnessed_cycle(h, {{0, 1, 2}, {3, 4, 4}}));  // repeated witness
    CHECK_FALSE(is_witnessed_cycle(h, {{0, 1, 2}, {3, 8, 4}}));  // wrong pairing
    CHECK(is_witnessed_cycle(fixtures::w4(), {{0, 1}, {2, 3}}));
}

TEST_CASE("witnessed cycles of c9 match the frozen canonical list") {
    auto found = find_witnessed_cycles(fixtures::c9(), 3);
    std::vector<WitnessedCycle> want{
        {{0, 1, 2}, {3, 4, 8}}, {{0, 1, 7}, {3, 8, 6}}, {{0, 1, 8}, {3, 7, 2}},
        {{0, 2, 3}, {8, 5, 1}}, {{0, 3, 6}, {1, 4, 7}}, {{0, 6, 8}, {7, 5, 2}},
        {{0, 7, 8}, {6, 1, 2}}, {{1, 2, 3}, {4, 5, 0}}, {{1, 2, 8}, {4, 0, 7}},
        {{1, 3, 4}, {0, 6, 2}}, {{1, 4, 7}, {2, 5, 8}}, {{2, 3, 4}, {5, 6, 1}},
        {{2, 4, 5}, {1, 7, 3}}, {{2, 5, 8}, {3, 6, 0}}, {{3, 4, 5}, {6, 7, 2}},
        {{3, 5, 6}, {2, 8, 4}}, {{4, 5, 6}, {7, 8, 3}}, {{4, 6, 7}, {3, 0, 5}},
        {{5, 6, 7}, {8, 0, 4}}, {{5, 7, 8}, {4, 1, 6}}, {{6, 7, 8}, {0, 1, 5}}};
    CHECK(found == want);
    for (const auto& wc : found) CHECK(is_witnessed_cycle(fixtures::c9(), wc));
}

TEST_CASE("w4 has exactly the frozen length-2 witnessed cycle") {
    auto found = find_witnessed_cycles(fixtures::w4(), 2);
    CHECK(found == std::vector<WitnessedCycle>{{{0, 1}, {2, 3}}});
}

TEST_CASE("witnessed-cycle vertex sets of c9 are its minimal dense sets") {
    auto found = find_witnessed_cycles(fixtures::c9(), 3);
    std::set<VertexSet> sets;
    for (const auto& wc : found) sets.insert(cycle_vertex_set(wc));
    auto mins = minimal_dense_sets(fixtures::c9(), 6);
    CHECK(sets == std::set<VertexSet>(mins.begin(), mins.end()));
}

TEST_CASE("weak cycle reduction yields cycles") {
    // (0,1,2,3) with {0,1,2} an edge reduces to the triangle (0,2,3).
    Hypergraph h(6, {{0, 1, 2}, {2, 3, 4}, {0, 3, 5}, {0, 2, 5}});
    REQUIRE(is_weak_cycle(h, {0, 1, 2, 3}));
    auto red = cycle_from_weak_cycle(h, {0, 1, 2, 3});
    CHECK(red == std::vector<Vertex>{0, 2, 3});
    CHECK(is_cycle(h, red));
}

TEST_CASE("degenerate length-4 reduction falls back to a 2-cycle") {
    // (0,1,2,3): {1,2,3} and {2,3,0} hmm -- craft edges so both reductions of
    // the 4-cycle land on hyperedge triangles, forcing the pair form.
    Hypergraph h(6, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 4}});
    REQUIRE(is_weak_cycle(h, {0, 1, 2, 3}));
    auto red = cycle_from_weak_cycle(h, {0, 1, 2, 3});
    CHECK(red.size() == 2);
    CHECK(is_cycle(h, red));
}

TEST_CASE("reduction output is always a cycle over random graphs") {
    std::mt19937_64 rng(19);
    int tested = 0;
    for (int t = 0; t < 400 && tested < 60; ++t) {
        Hypergraph h = fixtures::random_hypergraph(8, 10, rng);
        std::vector<Vertex> seq;
        for (int v = 0; v < 8; ++v) seq.push_back(v);
        std::shuffle(seq.begin(), seq.end(), rng);
        seq.resize(4 + rng() % 4);
        if (!is_weak_cycle(h, seq)) continue;
        ++tested;
        auto red = cycle_from_weak_cycle(h, seq);
        CHECK(is_cycle(h, red));
        for (Vertex v : red) CHECK(std::count(seq.begin(), seq.end(), v) == 1);
    }
    CHECK(tested > 0);
}

TEST_CASE("every found cycle is canonical: rotations never sort lower") {
    auto found = find_witnessed_cycles(fixtures::c9(), 3);
    for (const auto& wc : found) {
        int k = wc.length();
        for (int r = 1; r < k; ++r) {
            WitnessedCycle rot;
            for (int i = 0; i < k; ++i) {
                rot.xs.push_back(wc.xs[(i + r) % k]);
                rot.ys.push_back(wc.ys[(i + r) % k]);
            }
            CHECK_FALSE(rot < wc);
        }
    }
}
