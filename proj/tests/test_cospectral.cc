#include "doctest.h"

#include "corona/charpoly.hh"
#include "corona/cospectral.hh"
#include "corona/oracle.hh"
#include "corona/spectra.hh"

using namespace corona;

namespace {
// smallest adjacency-cospectral pair of all: C4 + isolated vertex vs the star K1,4
graph saltire_a() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
graph saltire_b() { return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }
} // namespace

TEST_CASE("cospectrality is exact charpoly equality") {
    CHECK(is_cospectral(saltire_a(), saltire_b(), matrix_kind::adjacency));
    CHECK_FALSE(is_cospectral(saltire_a(), saltire_b(), matrix_kind::laplacian));
    CHECK(is_cospectral(cycle_graph(4), cycle_graph(4), matrix_kind::adjacency));
    CHECK_FALSE(is_cospectral(cycle_graph(4), complete_graph(4), matrix_kind::adjacency));
    CHECK_FALSE(is_cospectral(cycle_graph(4), cycle_graph(5), matrix_kind::adjacency));
}

TEST_CASE("isomorphism decision") {
    CHECK(is_isomorphic_small(path_graph(3), *named_graph("K1,2")));
    CHECK_FALSE(is_isomorphic_small(saltire_a(), saltire_b()));
    CHECK(is_isomorphic_small(petersen_graph(), complement(complement(petersen_graph()))));
    // two labelings of the same 4-cycle
    graph c4a = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    graph c4b = make_graph(4, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});
    CHECK(is_isomorphic_small(c4a, c4b));
    graph big = complete_graph(13);
    CHECK_THROWS_AS((void)is_isomorphic_small(big, big), std::invalid_argument);
}

TEST_CASE("pair checks produce certificates only for non-isomorphic pairs") {
    pair_check same = check_pair(cycle_graph(4), cycle_graph(4), matrix_kind::adjacency);
    CHECK(same.cospectral);
    CHECK(same.iso_decided);
    CHECK(same.isomorphic);
    CHECK_FALSE(same.certificate.has_value());

    pair_check sal = check_pair(saltire_a(), saltire_b(), matrix_kind::adjacency);
    CHECK(sal.cospectral);
    CHECK(sal.iso_decided);
    CHECK_FALSE(sal.isomorphic);
    REQUIRE(sal.certificate.has_value());
    CHECK(!sal.certificate->noniso_witness.empty());
    CHECK(sal.certificate->shared_char_poly.c ==
          char_poly_exact(adjacency_matrix(saltire_a())).c);

    pair_check diff = check_pair(cycle_graph(4), complete_graph(4), matrix_kind::adjacency);
    CHECK_FALSE(diff.cospectral);
    CHECK_FALSE(diff.certificate.has_value());
}

TEST_CASE("enumeration counts pin the search") {
    // connected cubic graphs on 10 vertices
    CHECK(count_anchored_leaves(10, 3, true) == 132930);
    CHECK(count_regular_classes(10, 3) == 19);
    // small cells
    CHECK(count_regular_classes(6, 2) == 1);  // C6
    CHECK(count_regular_classes(6, 3) == 2);  // K3,3 and the prism
    CHECK(count_regular_classes(8, 3) == 5);
}

TEST_CASE("quartic cell on ten vertices yields the first regular cospectral pair") {
    CHECK(count_anchored_leaves(10, 4, true) == 527480);
    CHECK(count_regular_classes(10, 4) == 59);

    std::vector<cospectral_certificate> found = enumerate_cospectral_regular(10);
    REQUIRE(!found.empty());
    const cospectral_certificate& c = found.front();
    CHECK(c.a.n == 10);
    CHECK(c.b.n == 10);
    CHECK(regularity(c.a).r == 4);
    CHECK(regularity(c.b).r == 4);
    CHECK(is_cospectral(c.a, c.b, matrix_kind::adjacency));
    CHECK_FALSE(is_isomorphic_small(c.a, c.b));
    CHECK_FALSE(c.heuristic_witness);

    // regular and A-cospectral forces L- and Q-cospectrality
    CHECK(is_cospectral(c.a, c.b, matrix_kind::laplacian));
    CHECK(is_cospectral(c.a, c.b, matrix_kind::signless));

    // nothing cospectral below ten vertices
    CHECK(enumerate_cospectral_regular(9).empty());
}

TEST_CASE("transfer preconditions") {
    graph k3 = complete_graph(3);
    // isomorphic pair
    CHECK_THROWS_AS((void)transfer_pair(k3, cycle_graph(4), cycle_graph(4), corona_op::cvc,
                                        matrix_kind::adjacency, transfer_side::left),
                    std::invalid_argument);
    // cospectral but not regular
    CHECK_THROWS_AS((void)transfer_pair(k3, saltire_a(), saltire_b(), corona_op::cvc,
                                        matrix_kind::adjacency, transfer_side::left),
                    std::invalid_argument);
    // not cospectral
    CHECK_THROWS_AS((void)transfer_pair(k3, cycle_graph(4), complete_graph(4), corona_op::cvc,
                                        matrix_kind::adjacency, transfer_side::left),
                    std::invalid_argument);
}

TEST_CASE("transfer builds exactly cospectral composites") {
    std::vector<cospectral_certificate> found = enumerate_cospectral_regular(10);
    REQUIRE(!found.empty());
    const graph& a = found.front().a;
    const graph& b = found.front().b;
    graph k3 = complete_graph(3);

    cospectral_certificate t =
        transfer_pair(k3, a, b, corona_op::cvc, matrix_kind::adjacency, transfer_side::left);
    CHECK(t.a.n == 3 + 3 + 3 * 10);
    CHECK(t.b.n == t.a.n);
    CHECK(t.shared_char_poly.degree() == t.a.n);
    CHECK(t.shared_char_poly.c == char_poly_exact(adjacency_matrix(t.a)).c);
    CHECK(t.shared_char_poly.c == char_poly_exact(adjacency_matrix(t.b)).c);
    CHECK(!t.noniso_witness.empty());
}
