#include "doctest.h"

#include <cmath>
#include <random>

#include "corona/charpoly.hh"
#include "corona/invariants.hh"
#include "corona/oracle.hh"

using namespace corona;

TEST_CASE("plain-graph anchors, both routes") {
    struct anchor {
        const char* name;
        long long trees;
        double kf;
    };
    const anchor anchors[] = {
        {"K4", 16, 3.0}, {"C5", 5, 10.0}, {"C4", 4, 5.0}, {"K2", 1, 1.0}, {"petersen", 2000, 33.0},
    };
    for (const auto& a : anchors) {
        graph g = *named_graph(a.name);
        tree_count tc = spanning_trees_oracle(g);
        CHECK(tc.connected);
        CHECK(tc.count == a.trees);
        CHECK(kirchhoff_oracle(g) == doctest::Approx(a.kf).epsilon(1e-9));

        poly fl = char_poly_exact(laplacian_matrix(g));
        CHECK(spanning_trees_from_charpoly(fl) == a.trees);
        CHECK(to_double(kirchhoff_from_charpoly(fl)) == doctest::Approx(a.kf).epsilon(1e-12));
    }
}

TEST_CASE("disconnected graphs") {
    graph g = make_graph(4, {{0, 1}, {2, 3}});
    tree_count tc = spanning_trees_oracle(g);
    CHECK_FALSE(tc.connected);
    CHECK(tc.count == 0);
    CHECK_THROWS_AS((void)kirchhoff_oracle(g), std::invalid_argument);
    poly fl = char_poly_exact(laplacian_matrix(g)); // double zero root
    CHECK_THROWS_AS((void)spanning_trees_from_charpoly(fl), std::invalid_argument);
    CHECK_THROWS_AS((void)kirchhoff_from_charpoly(fl), std::invalid_argument);
}

TEST_CASE("composite anchors, closed route exact") {
    struct anchor {
        corona_op op;
        const char* g1;
        const char* g2;
        const char* trees;
        Rat kf;
    };
    const anchor anchors[] = {
        {corona_op::cvc, "C4", "K2", "5832", Rat(506, 3)},
        {corona_op::cec, "K3", "P3", "3072", Rat(703, 4)},
        {corona_op::cenc, "K4", "K3", "128000000000000", Rat(2547, 10)},
        {corona_op::cvc, "K2", "K3", "256", Rat(61)},
        {corona_op::cenc, "C5", "K1", "128000", Rat(91)},
        {corona_op::cec, "K3,3", "K1,2", "14089640214528", Rat(8891, 6)},
    };
    for (const auto& a : anchors) {
        graph g1 = *named_graph(a.g1);
        graph g2 = *named_graph(a.g2);
        regular_profile p1 = profile_of(g1);
        copy_profile cp = copy_profile_of(g2, matrix_kind::laplacian);

        Int t = spanning_trees_closed(p1, cp, a.op);
        CHECK(t == Int(a.trees));
        Rat kf = kirchhoff_closed(p1, cp, a.op);
        CHECK(kf == a.kf);

        composite comp = build_composite(a.op, g1, g2);
        tree_count tc = spanning_trees_oracle(comp.g);
        CHECK(tc.count == t);
        double kfo = kirchhoff_oracle(comp.g);
        CHECK(std::fabs(to_double(kf) - kfo) <= 1e-6 * std::fabs(kfo));
    }
}

TEST_CASE("report plumbing") {
    graph g1 = *named_graph("K4");
    graph g2 = *named_graph("K2");
    regular_profile p1 = profile_of(g1);
    copy_profile cp = copy_profile_of(g2, matrix_kind::laplacian);
    invariant_report closed = invariants_closed(p1, cp, corona_op::cvc);
    CHECK(closed.method == "closed_form");
    CHECK(closed.connected);

    composite comp = build_composite(corona_op::cvc, g1, g2);
    invariant_report oracle = invariants_oracle(comp.g, corona_op_name(corona_op::cvc));
    CHECK(oracle.method == "oracle");
    CHECK(oracle.operation == closed.operation);
    CHECK(oracle.spanning_trees == closed.spanning_trees);
    CHECK(std::fabs(oracle.kirchhoff - closed.kirchhoff) <=
          1e-6 * std::max(1.0, std::fabs(oracle.kirchhoff)));
}

TEST_CASE("kirchhoff decreases when an edge is added") {
    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 4; trial++) {
        // random connected graph on 7 vertices: a spanning path plus extras
        int n = 7;
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; v++) edges.push_back({v - 1, v});
        graph g = make_graph(n, edges);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int add = 0; add < 3;) {
            int u = pick(rng), v = pick(rng);
            if (u == v || g.has_edge(u, v)) continue;
            std::vector<std::pair<int, int>> e2 = g.edges;
            e2.push_back({u, v});
            graph g2 = make_graph(n, e2);
            CHECK(kirchhoff_oracle(g2) < kirchhoff_oracle(g) - 1e-9);
            g = g2;
            add++;
        }
    }
}
