#include "doctest.h"

#include <algorithm>

#include "corona/charpoly.hh"
#include "corona/graph.hh"

using namespace corona;

TEST_CASE("make_graph normalizes and validates") {
    graph g = make_graph(4, {{2, 0}, {1, 0}, {3, 2}});
    CHECK(g.n == 4);
    CHECK(g.m() == 3);
    CHECK(g.edges[0] == std::pair<int, int>(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));

    CHECK_THROWS_AS((void)make_graph(3, {{0, 0}}), std::exception);
    CHECK_THROWS_AS((void)make_graph(3, {{0, 3}}), std::exception);
    // a repeated edge in either orientation collapses to one
    CHECK(make_graph(3, {{0, 1}, {1, 0}}).m() == 1);
}

TEST_CASE("matrices of a path") {
    graph p3 = path_graph(3);
    imat a = adjacency_matrix(p3);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(0, 2) == 0);
    imat l = laplacian_matrix(p3);
    CHECK(l.at(1, 1) == 2);
    CHECK(l.at(0, 1) == -1);
    imat q = signless_laplacian_matrix(p3);
    CHECK(q.at(0, 1) == 1);
    CHECK(q.at(1, 1) == 2);
    imat b = incidence_matrix(p3);
    CHECK(b.rows == 3);
    CHECK(b.cols == 2);
    // Q = B B^T on the diagonal-free part
    imat bbt = imat_mul(b, imat_transpose(b));
    CHECK(bbt == q);
}

TEST_CASE("named graphs and aliases") {
    CHECK(named_graph("K4")->m() == 6);
    CHECK(named_graph("C5")->m() == 5);
    CHECK(named_graph("P4")->m() == 3);
    CHECK(named_graph("petersen")->n == 10);
    CHECK(named_graph("Q3")->n == 8);
    CHECK(named_graph("K2,3")->m() == 6);
    CHECK(named_graph("K33")->n == 6);
    CHECK(named_graph("K33")->m() == 9);
    CHECK_FALSE(named_graph("frucht").has_value());

    graph k12 = *named_graph("K1,2");
    graph p3 = path_graph(3);
    CHECK(char_poly_i64(adjacency_matrix(k12)) == char_poly_i64(adjacency_matrix(p3)));
}

TEST_CASE("regularity and complement") {
    CHECK(regularity(*named_graph("petersen")).is_regular);
    CHECK(regularity(*named_graph("petersen")).r == 3);
    CHECK_FALSE(regularity(path_graph(3)).is_regular);

    graph c5 = cycle_graph(5);
    graph cc = complement(c5);
    CHECK(cc.m() == 5); // self-complementary
    CHECK(regularity(cc).r == 2);
}

TEST_CASE("graph6 round trip") {
    for (const char* name : {"K4", "C7", "petersen", "K2,3", "Q3"}) {
        graph g = *named_graph(name);
        graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
    // documented encodings
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(parse_graph6("DQc").n == 5);
    CHECK_THROWS_AS((void)parse_graph6("\x01" "bad"), parse_error);
}

TEST_CASE("edge list round trip") {
    graph g = *named_graph("K2,3");
    graph back = parse_edge_list(write_edge_list(g));
    CHECK(back == g);
    CHECK_THROWS_AS((void)parse_edge_list("2\n0 1"), parse_error);
}

TEST_CASE("complete bipartite detection") {
    auto pq = complete_bipartite_parts(*named_graph("K2,3"));
    REQUIRE(pq.has_value());
    CHECK(pq->first == 2);
    CHECK(pq->second == 3);
    auto p3 = complete_bipartite_parts(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(p3->first == 1);
    CHECK(p3->second == 2);
    CHECK_FALSE(complete_bipartite_parts(cycle_graph(5)).has_value());
    // K4 is complete, not complete bipartite
    CHECK_FALSE(complete_bipartite_parts(complete_graph(4)).has_value());
}

TEST_CASE("exact charpoly and determinant") {
    poly f = char_poly_exact(adjacency_matrix(complete_graph(4)));
    // (x-3)(x+1)^3 = x^4 - 2x^3? no: expand exactly
    poly want = poly_mul(poly_linear(-3, 1), poly_pow(poly_linear(1, 1), 3));
    CHECK(f.c == want.c);

    auto f64 = char_poly_i64(adjacency_matrix(complete_graph(4)));
    REQUIRE(f64.size() == 5);
    for (size_t k = 0; k < f64.size(); k++) CHECK(Rat(f64[k]) == f.coeff((int)k));

    imat m(2, 2);
    m.at(0, 0) = 3;
    m.at(0, 1) = 7;
    m.at(1, 0) = 2;
    m.at(1, 1) = 5;
    CHECK(det_exact(m) == 1);
}
