#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corona/imat.hh"

namespace corona {

// simple undirected labeled graph on {0..n-1}. edges kept sorted as (u,v), u<v —
// this order also fixes incidence-matrix columns so block constructions are
// reproducible byte-for-byte.
struct graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels; // optional; empty or size n; never affects matrices

    int m() const { return (int)edges.size(); }
    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    bool operator==(const graph& o) const { return n == o.n && edges == o.edges; }
};

// normalizes edge direction/order, rejects loops, out-of-range ends, duplicates
graph make_graph(int n, std::vector<std::pair<int, int>> edges);

imat adjacency_matrix(const graph& g);
imat laplacian_matrix(const graph& g);
imat signless_laplacian_matrix(const graph& g);
imat incidence_matrix(const graph& g); // n x m, columns in edge order

graph complement(const graph& g);

struct regularity_profile {
    bool is_regular = false;
    int r = -1;
};
regularity_profile regularity(const graph& g);

// thrown by the text parsers; offset is a byte position into the input
struct parse_error : std::runtime_error {
    size_t offset;
    parse_error(size_t off, const std::string& what)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// header-less graph6, standard 6-bit encoding; n > 62 uses the '~' extension
graph parse_graph6(const std::string& text);
std::string write_graph6(const graph& g);

// edge-list text: first line "n <edge count>", then one "u v" per line
graph parse_edge_list(const std::string& text);
std::string write_edge_list(const graph& g);

std::string to_dot(const graph& g);

// built-in named graphs: Kn, Cn, Pn, Kp,q (also "KpxQ"), Q2/Q3/Q4, petersen.
// "K33" is accepted as an alias for K3,3. returns nothing if the name is unknown.
std::optional<graph> named_graph(const std::string& name);

graph complete_graph(int n);
graph cycle_graph(int n);
graph path_graph(int n);
graph complete_bipartite(int p, int q);
graph hypercube_graph(int k);
graph petersen_graph();

// detects complete-bipartite structure; yields (p, q) with p <= q
std::optional<std::pair<int, int>> complete_bipartite_parts(const graph& g);

} // namespace corona
