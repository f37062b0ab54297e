#pragma once
// Central graph and the three corona-style products built on it.
//
// Vertex layout of every composite, in index order:
//   [0, n1)                      original vertices of G1
//   [n1, n1+m1)                  subdivision vertices, one per edge of G1 in
//                                (min,max)-lex order
//   [n1+m1, ...)                 copies of G2, block b occupying n2 consecutive
//                                indices
// Labels record provenance: "v3", "s0-2" (subdivision of edge {0,2}),
// "c1.4" (vertex 4 inside copy 1).

#include <string>
#include <vector>

#include "corona/graph.hh"

namespace corona {

struct index_range {
    int begin = 0;
    int end = 0; // half-open
    int size() const { return end - begin; }
};

struct composite_layout {
    index_range g1_vertices;
    index_range subdivision_vertices;
    std::vector<index_range> copy_blocks;
};

struct composite {
    graph g;
    composite_layout layout;
};

// subdivide every edge of g and join every pair of originals that was NOT
// adjacent in g
composite central_graph(const graph& g);

// central graph of g1, plus a copy of g2 per ORIGINAL vertex, copy i fully
// joined to original vertex i
composite central_vertex_corona(const graph& g1, const graph& g2);

// central graph of g1, plus a copy of g2 per EDGE, copy i fully joined to the
// subdivision vertex of edge i; throws std::invalid_argument when g1 has no
// edges
composite central_edge_corona(const graph& g1, const graph& g2);

// central graph of g1, plus a copy of g2 per EDGE, copy i fully joined to BOTH
// endpoints of edge i; throws std::invalid_argument when g1 has no edges
composite central_edge_neighborhood_corona(const graph& g1, const graph& g2);

enum class corona_op { cvc, cec, cenc };

const char* corona_op_name(corona_op op);    // "central-vertex-corona", ...
const char* corona_op_symbol(corona_op op);  // "G1 (.) G2" style ascii tag

composite build_composite(corona_op op, const graph& g1, const graph& g2);

// order/size predicted from (n1, m1, n2, m2) alone, used to cross-check the
// constructions
long long expected_order(corona_op op, const graph& g1, const graph& g2);
long long expected_size(corona_op op, const graph& g1, const graph& g2);

} // namespace corona
