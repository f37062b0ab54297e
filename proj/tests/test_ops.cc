#include "doctest.h"

#include <algorithm>

#include "corona/oracle.hh"
#include "corona/ops.hh"

using namespace corona;

TEST_CASE("central graph of small anchors") {
    // K3 subdivides to a 6-cycle and has no non-adjacent pairs to join
    composite c = central_graph(complete_graph(3));
    CHECK(c.g.n == 6);
    CHECK(c.g.m() == 6);
    auto deg = c.g.degrees();
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }));
    CHECK(is_connected(c.g));

    // P3 gains the one missing end-to-end join: a 5-cycle
    composite p = central_graph(path_graph(3));
    CHECK(p.g.n == 5);
    CHECK(p.g.m() == 5);
    auto pdeg = p.g.degrees();
    CHECK(std::all_of(pdeg.begin(), pdeg.end(), [](int d) { return d == 2; }));
    CHECK(is_connected(p.g));

    // layout bookkeeping
    CHECK(c.layout.g1_vertices.size() == 3);
    CHECK(c.layout.subdivision_vertices.size() == 3);
    CHECK(c.layout.copy_blocks.empty());
}

TEST_CASE("central graph size formula") {
    for (const char* name : {"K4", "C5", "petersen", "K2,3"}) {
        graph g = *named_graph(name);
        composite c = central_graph(g);
        CHECK(c.g.n == g.n + g.m());
        long long nonadj = (long long)g.n * (g.n - 1) / 2 - g.m();
        CHECK(c.g.m() == 2LL * g.m() + nonadj);
    }
}

TEST_CASE("composite orders and sizes match the predictions") {
    const corona_op ops[] = {corona_op::cvc, corona_op::cec, corona_op::cenc};
    for (const char* n1 : {"K4", "C5", "K3,3"})
        for (const char* n2 : {"K1", "K2", "P3"})
            for (corona_op op : ops) {
                graph g1 = *named_graph(n1);
                graph g2 = *named_graph(n2);
                composite c = build_composite(op, g1, g2);
                CHECK(c.g.n == expected_order(op, g1, g2));
                CHECK(c.g.m() == expected_size(op, g1, g2));
                CHECK(is_connected(c.g));
                CHECK((int)c.layout.copy_blocks.size() ==
                      (op == corona_op::cvc ? g1.n : g1.m()));
            }
}

TEST_CASE("copy attachment degrees") {
    graph g1 = complete_graph(4);
    graph g2 = complete_graph(2); // each copy vertex has degree 1 inside its copy

    // cvc: copy vertices attach to one original
    composite v = central_vertex_corona(g1, g2);
    auto dv = v.g.degrees();
    for (const auto& blk : v.layout.copy_blocks)
        for (int i = blk.begin; i < blk.end; i++) CHECK(dv[(size_t)i] == 2);

    // cec: copy vertices attach to one subdivision vertex
    composite e = central_edge_corona(g1, g2);
    auto de = e.g.degrees();
    for (const auto& blk : e.layout.copy_blocks)
        for (int i = blk.begin; i < blk.end; i++) CHECK(de[(size_t)i] == 2);
    // subdivision vertices: two endpoints plus one full copy
    for (int i = e.layout.subdivision_vertices.begin; i < e.layout.subdivision_vertices.end;
         i++)
        CHECK(de[(size_t)i] == 2 + g2.n);

    // cenc: copy vertices attach to both endpoints of their edge
    composite ne = central_edge_neighborhood_corona(g1, g2);
    auto dn = ne.g.degrees();
    for (const auto& blk : ne.layout.copy_blocks)
        for (int i = blk.begin; i < blk.end; i++) CHECK(dn[(size_t)i] == 3);
    for (int i = ne.layout.subdivision_vertices.begin;
         i < ne.layout.subdivision_vertices.end; i++)
        CHECK(dn[(size_t)i] == 2);
}

TEST_CASE("edge operations reject empty base graphs") {
    graph empty = make_graph(3, {});
    graph k2 = complete_graph(2);
    CHECK_THROWS_AS((void)central_edge_corona(empty, k2), std::invalid_argument);
    CHECK_THROWS_AS((void)central_edge_neighborhood_corona(empty, k2), std::invalid_argument);
    CHECK_NOTHROW((void)central_vertex_corona(empty, k2));
}

TEST_CASE("op names") {
    CHECK(std::string(corona_op_name(corona_op::cvc)) == "central-vertex-corona");
    CHECK(std::string(corona_op_name(corona_op::cec)) == "central-edge-corona");
    CHECK(std::string(corona_op_name(corona_op::cenc)) == "central-edge-neighborhood-corona");
}
