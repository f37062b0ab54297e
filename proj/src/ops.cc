#include "corona/ops.hh"

#include <stdexcept>

namespace corona {

namespace {

// shared skeleton: originals, subdivision vertices, complement edges among
// originals. Copies are appended by the callers.
struct skeleton {
    int n1, m1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
};

skeleton central_skeleton(const graph& g) {
    skeleton sk;
    sk.n1 = g.n;
    sk.m1 = g.m();
    for (int i = 0; i < g.n; i++) sk.labels.push_back("v" + std::to_string(i));
    for (int k = 0; k < sk.m1; k++) {
        auto [u, v] = g.edges[(size_t)k];
        int s = g.n + k;
        sk.edges.push_back({u, s});
        sk.edges.push_back({v, s});
        sk.labels.push_back("s" + std::to_string(u) + "-" + std::to_string(v));
    }
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (!g.has_edge(u, v)) sk.edges.push_back({u, v});
    return sk;
}

composite assemble(skeleton sk, const graph& g2, int copies,
                   const std::vector<std::vector<int>>& hooks) {
    int base = sk.n1 + sk.m1;
    composite out;
    out.layout.g1_vertices = {0, sk.n1};
    out.layout.subdivision_vertices = {sk.n1, base};
    for (int b = 0; b < copies; b++) {
        int off = base + b * g2.n;
        out.layout.copy_blocks.push_back({off, off + g2.n});
        for (int j = 0; j < g2.n; j++)
            sk.labels.push_back("c" + std::to_string(b) + "." + std::to_string(j));
        for (auto [u, v] : g2.edges) sk.edges.push_back({off + u, off + v});
        for (int h : hooks[(size_t)b])
            for (int j = 0; j < g2.n; j++) sk.edges.push_back({h, off + j});
    }
    out.g = make_graph(base + copies * g2.n, std::move(sk.edges));
    out.g.labels = std::move(sk.labels);
    return out;
}

} // namespace

composite central_graph(const graph& g) {
    skeleton sk = central_skeleton(g);
    composite out;
    out.layout.g1_vertices = {0, sk.n1};
    out.layout.subdivision_vertices = {sk.n1, sk.n1 + sk.m1};
    out.g = make_graph(sk.n1 + sk.m1, std::move(sk.edges));
    out.g.labels = std::move(sk.labels);
    return out;
}

composite central_vertex_corona(const graph& g1, const graph& g2) {
    skeleton sk = central_skeleton(g1);
    std::vector<std::vector<int>> hooks;
    for (int i = 0; i < g1.n; i++) hooks.push_back({i});
    return assemble(std::move(sk), g2, g1.n, hooks);
}

composite central_edge_corona(const graph& g1, const graph& g2) {
    if (g1.m() == 0)
        throw std::invalid_argument("central_edge_corona: g1 has no edges, no copies to attach");
    skeleton sk = central_skeleton(g1);
    std::vector<std::vector<int>> hooks;
    for (int k = 0; k < g1.m(); k++) hooks.push_back({g1.n + k});
    return assemble(std::move(sk), g2, g1.m(), hooks);
}

composite central_edge_neighborhood_corona(const graph& g1, const graph& g2) {
    if (g1.m() == 0)
        throw std::invalid_argument(
            "central_edge_neighborhood_corona: g1 has no edges, no copies to attach");
    skeleton sk = central_skeleton(g1);
    std::vector<std::vector<int>> hooks;
    for (int k = 0; k < g1.m(); k++) {
        auto [u, v] = g1.edges[(size_t)k];
        hooks.push_back({u, v});
    }
    return assemble(std::move(sk), g2, g1.m(), hooks);
}

const char* corona_op_name(corona_op op) {
    switch (op) {
        case corona_op::cvc: return "central-vertex-corona";
        case corona_op::cec: return "central-edge-corona";
        case corona_op::cenc: return "central-edge-neighborhood-corona";
    }
    return "?";
}

const char* corona_op_symbol(corona_op op) {
    switch (op) {
        case corona_op::cvc: return "G1 (.) G2";
        case corona_op::cec: return "G1 (_) G2";
        case corona_op::cenc: return "G1 [_] G2";
    }
    return "?";
}

composite build_composite(corona_op op, const graph& g1, const graph& g2) {
    switch (op) {
        case corona_op::cvc: return central_vertex_corona(g1, g2);
        case corona_op::cec: return central_edge_corona(g1, g2);
        case corona_op::cenc: return central_edge_neighborhood_corona(g1, g2);
    }
    throw std::logic_error("build_composite: bad op");
}

long long expected_order(corona_op op, const graph& g1, const graph& g2) {
    long long n1 = g1.n, m1 = g1.m(), n2 = g2.n;
    switch (op) {
        case corona_op::cvc: return n1 + m1 + n1 * n2;
        case corona_op::cec:
        case corona_op::cenc: return n1 + m1 + m1 * n2;
    }
    return -1;
}

long long expected_size(corona_op op, const graph& g1, const graph& g2) {
    long long n1 = g1.n, m1 = g1.m(), n2 = g2.n, m2 = g2.m();
    long long central = 2 * m1 + n1 * (n1 - 1) / 2 - m1; // subdivision + complement
    switch (op) {
        case corona_op::cvc: return central + n1 * m2 + n1 * n2;
        case corona_op::cec: return central + m1 * m2 + m1 * n2;
        case corona_op::cenc: return central + m1 * m2 + 2 * m1 * n2;
    }
    return -1;
}

} // namespace corona
