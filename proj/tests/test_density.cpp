#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "multipede/density.hpp"

using namespace multipede;

TEST_CASE("dense and super-dense on fixed sets") {
    Hypergraph c9 = fixtures::c9();
    CHECK_FALSE(is_dense(c9, {0, 1, 3}));  // 3 vertices, 1 edge: 3 > 2
    CHECK(is_dense(fixtures::w4(), {0, 1, 2, 3}));
    CHECK_FALSE(is_super_dense(fixtures::w4(), {0, 1, 2, 3}));  // 4 = 2*2
    CHECK(is_super_dense(fixtures::k4(), {0, 1, 2, 3}));        // 4 < 8
    CHECK_THROWS_AS(is_dense(c9, {}), InputError);
}

TEST_CASE("meager verdicts match the frozen oracle values") {
    Hypergraph c9 = fixtures::c9();
    CHECK(is_meager(c9, 2).ok);
    Verdict v3 = is_meager(c9, 3);
    CHECK_FALSE(v3.ok);
    REQUIRE(v3.witness.has_value());
    CHECK(is_dense(c9, *v3.witness));
    CHECK(v3.witness->size() <= 6);
    CHECK(is_meager(fixtures::h1(), 2).ok);
    CHECK(is_meager(fixtures::h1(), 5).ok);  // no dense set at all
    CHECK_FALSE(is_meager(fixtures::w4(), 2).ok);
    CHECK(*is_meager(fixtures::w4(), 2).witness == VertexSet{0, 1, 2, 3});
}

TEST_CASE("modest verdicts match the frozen oracle values") {
    Hypergraph c9 = fixtures::c9();
    CHECK(is_modest(c9, 2).ok);
    CHECK(is_modest(c9, 3).ok);
    Verdict v4 = is_modest(c9, 4);
    CHECK_FALSE(v4.ok);  // {0..6} holds 4 edges: 7 < 8
    REQUIRE(v4.witness.has_value());
    CHECK(*v4.witness == VertexSet{0, 1, 2, 3, 4, 5, 6});
    CHECK(is_modest(fixtures::w4(), 2).ok);
    CHECK_FALSE(is_modest(fixtures::k4(), 2).ok);
    CHECK(is_meager(fixtures::c13p(), 2).ok);
}

TEST_CASE("fast and brute-force meager/modest verdicts agree on random graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 120; ++t) {
        int n = 5 + int(rng() % 6);
        Hypergraph h = fixtures::random_hypergraph(n, 4 + int(rng() % 14), rng);
        for (int l = 2; l <= 3; ++l) {
            CHECK(is_meager(h, l).ok == is_meager(h, l, Algorithm::BruteForce).ok);
            CHECK(is_modest(h, l).ok == is_modest(h, l, Algorithm::BruteForce).ok);
        }
    }
}

TEST_CASE("meagerness and modesty are antitone in l") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Hypergraph h = fixtures::random_hypergraph(9, 10, rng);
        for (int l = 2; l <= 4; ++l) {
            if (!is_meager(h, l).ok) CHECK_FALSE(is_meager(h, l + 1).ok);
            if (!is_modest(h, l).ok) CHECK_FALSE(is_modest(h, l + 1).ok);
            if (is_meager(h, l).ok) CHECK(is_modest(h, l).ok);  // dense ⊇ super-dense
        }
    }
}

TEST_CASE("minimal dense sets of c9 match the frozen 21-set list") {
    std::vector<VertexSet> want{
        {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 6}, {0, 1, 2, 3, 4, 8}, {0, 1, 2, 3, 5, 8},
        {0, 1, 2, 3, 7, 8}, {0, 1, 2, 4, 7, 8}, {0, 1, 2, 6, 7, 8}, {0, 1, 3, 4, 6, 7},
        {0, 1, 3, 6, 7, 8}, {0, 1, 5, 6, 7, 8}, {0, 2, 3, 5, 6, 8}, {0, 2, 5, 6, 7, 8},
        {0, 3, 4, 5, 6, 7}, {0, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 7},
        {1, 2, 4, 5, 7, 8}, {1, 4, 5, 6, 7, 8}, {2, 3, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 8},
        {3, 4, 5, 6, 7, 8}};
    CHECK(minimal_dense_sets(fixtures::c9(), 6) == want);
    CHECK(minimal_dense_sets(fixtures::c9(), 4).empty());
    CHECK(minimal_dense_sets(fixtures::w4(), 4) ==
          std::vector<VertexSet>{{0, 1, 2, 3}});
}

TEST_CASE("fast minimal dense sets equal the subset-scan oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 80; ++t) {
        int n = 5 + int(rng() % 6);
        Hypergraph h = fixtures::random_hypergraph(n, 3 + int(rng() % 15), rng);
        int cap = 4 + 2 * int(rng() % 2);
        CHECK(minimal_dense_sets(h, cap) == minimal_dense_sets_bruteforce(h, cap));
    }
}

TEST_CASE("oddness matches the frozen verdicts and the brute force") {
    CHECK(is_odd(fixtures::c9()));
    CHECK(is_odd(fixtures::k4()));
    CHECK(is_odd(fixtures::c13p()));
    CHECK_FALSE(is_odd(fixtures::w4()));
    CHECK_FALSE(is_odd(fixtures::h1()));
    CHECK(is_odd_bruteforce(fixtures::c9()).ok);
    Verdict w = is_odd_bruteforce(fixtures::w4());
    CHECK_FALSE(w.ok);
    CHECK(*w.witness == VertexSet{0, 1});
    CHECK(*is_odd_bruteforce(fixtures::h1()).witness == VertexSet{0, 1});
}

TEST_CASE("odd_failing_set is met evenly by every edge") {
    for (const Hypergraph& h : {fixtures::w4(), fixtures::h1()}) {
        auto x = odd_failing_set(h);
        REQUIRE(x.has_value());
        CHECK_FALSE(x->empty());
        for (const auto& e : h.edges()) {
            int hits = 0;
            for (Vertex v : e) hits += std::binary_search(x->begin(), x->end(), v);
            CHECK(hits % 2 == 0);
        }
    }
    CHECK_FALSE(odd_failing_set(fixtures::c9()).has_value());
}

TEST_CASE("odd rank method agrees with brute force on random graphs") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        int n = 4 + int(rng() % 8);
        Hypergraph h = fixtures::random_hypergraph(n, 2 + int(rng() % 16), rng);
        CHECK(is_odd(h) == is_odd_bruteforce(h).ok);
    }
}

TEST_CASE("red/green decomposition of c9") {
    RedGreenDecomposition d2 = red_green(fixtures::c9(), 2);
    CHECK(d2.red_blocks.empty());
    CHECK(d2.green.size() == 9);
    CHECK_FALSE(d2.green_empty);
    CHECK(d2.green_subhypergraph.sub == fixtures::c9());

    RedGreenDecomposition d3 = red_green(fixtures::c9(), 3);
    CHECK(d3.red_blocks.size() == 21);
    CHECK(d3.green.empty());
    CHECK(d3.green_empty);
    CHECK_FALSE(d3.blocks_disjoint);  // c9 is not 8-modest, lemmas do not apply
}

TEST_CASE("red/green decomposition of w4 removes the dense block") {
    RedGreenDecomposition d = red_green(fixtures::w4(), 2);
    REQUIRE(d.red_blocks.size() == 1);
    CHECK(d.red_blocks[0] == VertexSet{0, 1, 2, 3});
    CHECK(d.green_empty);
}

TEST_CASE("green part induces only edges among green vertices") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        Hypergraph h = fixtures::random_hypergraph(10, 12, rng);
        RedGreenDecomposition d = red_green(h, 2);
        for (const auto& e : d.green_subhypergraph.sub.edges())
            for (Vertex v : e)
                CHECK(std::binary_search(d.green.begin(), d.green.end(),
                                         d.green_subhypergraph.to_parent[v]));
        for (const auto& b : d.red_blocks) CHECK(is_dense(h, b));
    }
}
