#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "multipede/gf2.hpp"
#include "multipede/io.hpp"

using namespace multipede;

TEST_CASE("make_edge sorts and rejects repeats") {
    CHECK(make_edge(3, 1, 2) == Edge{1, 2, 3});
    CHECK_THROWS_AS(make_edge(1, 1, 2), InputError);
    CHECK_THROWS_AS(make_edge(0, 2, 2), InputError);
}

TEST_CASE("construction validates vertices and duplicates") {
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1, 3}}), InputError);
    CHECK_THROWS_AS(Hypergraph(4, {{-1, 1, 2}}), InputError);
    CHECK_THROWS_AS(Hypergraph(4, {{0, 1, 2}, {0, 1, 2}}), InputError);
    Hypergraph h(5, {{2, 3, 4}, {0, 1, 2}});  // reordered on construction
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("c9 edge list matches the frozen value") {
    Hypergraph h = fixtures::c9();
    std::vector<Edge> want{{0, 1, 3}, {0, 2, 8}, {0, 6, 7}, {1, 2, 4}, {1, 7, 8},
                           {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 8}};
    CHECK(h.n() == 9);
    CHECK(h.edges() == want);
    CHECK(h.has_edge(0, 1, 3));
    CHECK(h.has_edge(Edge{1, 7, 8}));
    CHECK_FALSE(h.has_edge(0, 1, 2));
}

TEST_CASE("weight and witnesses on c9") {
    Hypergraph h = fixtures::c9();
    CHECK(weight(h, {0, 1, 2, 3, 4}) == 2);
    CHECK(weight(h, {0, 1}) == 0);
    CHECK(witnesses(h, 0, 2) == VertexSet{8});
    CHECK(witnesses(h, 0, 5) == VertexSet{});
    CHECK(adjacent(h, 0, 2));
    CHECK_FALSE(adjacent(h, 0, 5));
}

TEST_CASE("weight equals per-edge subset count on random graphs") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        Hypergraph h = fixtures::random_hypergraph(10, 15, rng);
        VertexSet x = fixtures::random_subset(10, 1 + int(rng() % 9), rng);
        int direct = 0;
        for (const auto& e : h.edges()) {
            bool in = true;
            for (Vertex v : e)
                in = in && std::binary_search(x.begin(), x.end(), v);
            direct += in;
        }
        CHECK(weight(h, x) == direct);
    }
}

TEST_CASE("induced subgraph relabels and maps back") {
    Hypergraph h = fixtures::c9();
    Induced ind = induced(h, {0, 1, 2, 3, 4});
    CHECK(ind.sub.n() == 5);
    CHECK(ind.to_parent == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(ind.sub.edges() == std::vector<Edge>{{0, 1, 3}, {1, 2, 4}});
    Induced sparse = induced(h, {0, 2, 8});
    CHECK(sparse.sub.edges() == std::vector<Edge>{{0, 1, 2}});  // {0,2,8} relabeled
    CHECK(sparse.to_parent == std::vector<Vertex>{0, 2, 8});
}

TEST_CASE("check_vertex_set rejects bad input") {
    Hypergraph h = fixtures::c9();
    CHECK_THROWS_AS(check_vertex_set(h, {0, 9}), InputError);
    CHECK_THROWS_AS(check_vertex_set(h, {1, 0}), InputError);  // unsorted
    CHECK_THROWS_AS(check_vertex_set(h, {0, 0}), InputError);
}

TEST_CASE("incidence ranks match the frozen values") {
    CHECK(incidence_matrix(fixtures::c9()).rank() == 9);
    CHECK(incidence_matrix(fixtures::k4()).rank() == 4);
    CHECK(incidence_matrix(fixtures::h1()).rank() == 1);
    CHECK(incidence_matrix(fixtures::c13p()).rank() == 13);
    CHECK(fixtures::c13p().edge_count() == 14);
}

TEST_CASE("solve finds a preimage and respects unsolvable targets") {
    Gf2Matrix a(2, 3);  // rows: x0+x1, x1+x2
    a.set(0, 0, true);
    a.set(0, 1, true);
    a.set(1, 1, true);
    a.set(1, 2, true);
    auto s = a.solve({1, 0});
    REQUIRE(s.has_value());
    CHECK(((*s)[0] ^ (*s)[1]) == 1);
    CHECK(((*s)[1] ^ (*s)[2]) == 0);
    Gf2Matrix z(2, 2);  // duplicate rows x0; t=(1,0) unsolvable
    z.set(0, 0, true);
    z.set(1, 0, true);
    CHECK_FALSE(z.solve({1, 0}).has_value());
    CHECK(z.solve({1, 1}).has_value());
}

TEST_CASE("kernel and left kernel are orthogonal complements of the action") {
    Hypergraph h = fixtures::c13p();
    Gf2Matrix a = incidence_matrix(h);
    CHECK(a.kernel().empty());  // full column rank
    auto left = a.left_kernel();
    REQUIRE(left.size() == 1);  // 14 rows, rank 13
    const auto& u = left[0];
    for (int c = 0; c < a.cols(); ++c) {
        int dot = 0;
        for (int r = 0; r < a.rows(); ++r) dot ^= (u[r] & a.get(r, c));
        CHECK(dot == 0);
    }
    CHECK(u[0] == 1);  // edge 0 participates: basis of the non-iso twist
}

TEST_CASE("kernel of the single-edge incidence matrix has dimension 2") {
    auto ker = incidence_matrix(fixtures::h1()).kernel();
    CHECK(ker.size() == 2);
    for (const auto& k : ker) CHECK((k[0] ^ k[1] ^ k[2]) == 0);
}

TEST_CASE("hg serialization round-trips") {
    for (const Hypergraph& h :
         {fixtures::c9(), fixtures::c13p(), fixtures::h1(), Hypergraph(5, {})}) {
        std::istringstream in(serialize_hg(h));
        CHECK(parse_hg(in) == h);
    }
}

TEST_CASE("hg parser is strict") {
    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_hg(in), InputError);
    };
    fails("hg 2\nn 3\n");
    fails("n 3\n");
    fails("hg 1\nn 4\ne 2 1 0\n");                  // unsorted triple
    fails("hg 1\nn 4\ne 0 1 2\ne 0 1 2\n");         // duplicate
    fails("hg 1\nn 4\ne 0 1 3\ne 0 1 2\n");         // out of order
    fails("hg 1\nn 4\ne 0 1 4\n");                  // out of range
    fails("hg 1\nn 4\ne 0 1\n");                    // short line
    std::istringstream ok("hg 1\nn 4\ne 0 1 2\ne 1 2 3\n");
    CHECK(parse_hg(ok).edge_count() == 2);
}

TEST_CASE("stream output lists header and edges") {
    std::ostringstream os;
    os << fixtures::h1();
    CHECK(os.str().find("3") != std::string::npos);
}
