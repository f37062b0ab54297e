#include "corona/graph.hh"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace corona {

bool graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> graph::degrees() const {
    std::vector<int> d((size_t)n, 0);
    for (auto [u, v] : edges) {
        d[(size_t)u]++;
        d[(size_t)v]++;
    }
    return d;
}

graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("make_graph: negative order");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        if (u < 0 || v >= n) throw std::invalid_argument("make_graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

imat adjacency_matrix(const graph& g) {
    imat a(g.n, g.n);
    for (auto [u, v] : g.edges) {
        a.at(u, v) = 1;
        a.at(v, u) = 1;
    }
    return a;
}

imat laplacian_matrix(const graph& g) {
    imat l(g.n, g.n);
    for (auto [u, v] : g.edges) {
        l.at(u, v) = -1;
        l.at(v, u) = -1;
        l.at(u, u)++;
        l.at(v, v)++;
    }
    return l;
}

imat signless_laplacian_matrix(const graph& g) {
    imat q(g.n, g.n);
    for (auto [u, v] : g.edges) {
        q.at(u, v) = 1;
        q.at(v, u) = 1;
        q.at(u, u)++;
        q.at(v, v)++;
    }
    return q;
}

imat incidence_matrix(const graph& g) {
    imat b(g.n, g.m());
    for (int j = 0; j < g.m(); j++) {
        b.at(g.edges[(size_t)j].first, j) = 1;
        b.at(g.edges[(size_t)j].second, j) = 1;
    }
    return b;
}

graph complement(const graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (!g.has_edge(u, v)) e.push_back({u, v});
    return make_graph(g.n, std::move(e));
}

regularity_profile regularity(const graph& g) {
    regularity_profile p;
    if (g.n == 0) return p;
    auto d = g.degrees();
    for (int x : d)
        if (x != d[0]) return p;
    p.is_regular = true;
    p.r = d[0];
    return p;
}

// ---- graph6 ----

namespace {

void g6_append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (size_t j = 0; j < 6; j++) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out.push_back((char)(v + 63));
    }
}

} // namespace

graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw parse_error(0, "graph6: empty input");
    size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw parse_error(pos, "graph6: truncated input");
        unsigned char c = (unsigned char)s[pos];
        if (c < 63 || c > 126) throw parse_error(pos, "graph6: character out of range");
        pos++;
        return (int)c - 63;
    };
    long long n;
    if (s[0] == '~') {
        pos = 1;
        if (pos < s.size() && s[pos] == '~')
            throw parse_error(pos, "graph6: 36-bit order not supported");
        long long v = 0;
        for (int k = 0; k < 3; k++) v = (v << 6) | take();
        n = v;
    } else {
        n = take();
    }
    if (n > 4000) throw parse_error(0, "graph6: order too large for this tool");
    size_t nbits = (size_t)(n * (n - 1) / 2);
    std::vector<bool> bits;
    bits.reserve(nbits + 6);
    while (bits.size() < nbits) {
        int v = take();
        for (int j = 5; j >= 0; j--) bits.push_back((v >> j) & 1);
    }
    for (size_t i = nbits; i < bits.size(); i++)
        if (bits[i]) throw parse_error(pos - 1, "graph6: nonzero padding bits");
    if (pos != s.size()) throw parse_error(pos, "graph6: trailing characters");
    std::vector<std::pair<int, int>> edges;
    size_t k = 0;
    for (int v = 1; v < n; v++)
        for (int u = 0; u < v; u++, k++)
            if (bits[k]) edges.push_back({u, v});
    return make_graph((int)n, std::move(edges));
}

std::string write_graph6(const graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back((char)(g.n + 63));
    } else if (g.n <= 258047) {
        out.push_back('~');
        out.push_back((char)(((g.n >> 12) & 63) + 63));
        out.push_back((char)(((g.n >> 6) & 63) + 63));
        out.push_back((char)((g.n & 63) + 63));
    } else {
        throw std::invalid_argument("write_graph6: order too large");
    }
    std::vector<bool> bits;
    bits.reserve((size_t)g.n * (size_t)(g.n - 1) / 2);
    for (int v = 1; v < g.n; v++)
        for (int u = 0; u < v; u++) bits.push_back(g.has_edge(u, v));
    g6_append_bits(out, bits);
    return out;
}

// ---- edge-list text ----

graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t offset = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            size_t here = offset;
            offset += line.size() + 1;
            size_t h = line.find('#');
            if (h != std::string::npos) line.resize(h);
            bool blank = true;
            for (char c : line)
                if (!std::isspace((unsigned char)c)) blank = false;
            if (!blank) {
                offset = here; // report errors at the start of this line
                offset += line.size() + 1;
                return true;
            }
        }
        return false;
    };
    if (!next_line()) throw parse_error(0, "edge list: missing header line");
    std::istringstream hs(line);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw parse_error(0, "edge list: header must be 'n <edge count>'");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; i++) {
        if (!next_line()) throw parse_error(offset, "edge list: fewer edges than header declares");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error(offset - line.size() - 1, "edge list: bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error(offset - line.size() - 1, "edge list: endpoint out of range");
        if (u == v) throw parse_error(offset - line.size() - 1, "edge list: self-loop");
        edges.push_back({(int)u, (int)v});
    }
    return make_graph((int)n, std::move(edges));
}

std::string write_edge_list(const graph& g) {
    std::ostringstream os;
    os << g.n << " " << g.m() << "\n";
    for (auto [u, v] : g.edges) os << u << " " << v << "\n";
    return os.str();
}

std::string to_dot(const graph& g) {
    std::ostringstream os;
    os << "graph g {\n  node [shape=circle];\n";
    for (int i = 0; i < g.n; i++) {
        os << "  v" << i;
        if ((size_t)i < g.labels.size() && !g.labels[(size_t)i].empty()) {
            const std::string& lab = g.labels[(size_t)i];
            // provenance coloring: originals / subdivision vertices / copy blocks
            const char* color = lab[0] == 's' ? "lightblue" : lab[0] == 'c' ? "lightgrey" : "white";
            os << " [label=\"" << lab << "\", style=filled, fillcolor=" << color << "]";
        }
        os << ";\n";
    }
    for (auto [u, v] : g.edges) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

// ---- builders ----

graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) e.push_back({u, v});
    return make_graph(n, std::move(e));
}

graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++) e.push_back({i, (i + 1) % n});
    return make_graph(n, std::move(e));
}

graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
    return make_graph(n, std::move(e));
}

graph complete_bipartite(int p, int q) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < p; u++)
        for (int v = 0; v < q; v++) e.push_back({u, p + v});
    return make_graph(p + q, std::move(e));
}

graph hypercube_graph(int k) {
    int n = 1 << k;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
        for (int b = 0; b < k; b++)
            if (!(u & (1 << b))) e.push_back({u, u | (1 << b)});
    return make_graph(n, std::move(e));
}

graph petersen_graph() {
    // outer 5-cycle, inner pentagram, spokes
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; i++) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
        e.push_back({i, 5 + i});
    }
    return make_graph(10, std::move(e));
}

std::optional<graph> named_graph(const std::string& name) {
    std::string s;
    for (char c : name)
        if (!std::isspace((unsigned char)c)) s.push_back((char)std::tolower((unsigned char)c));
    if (s.empty()) return std::nullopt;
    if (s == "petersen") return petersen_graph();
    if (s == "k33") return complete_bipartite(3, 3); // common shorthand
    auto parse_int = [](const std::string& t) -> std::optional<int> {
        if (t.empty() || t.size() > 4) return std::nullopt;
        for (char c : t)
            if (!std::isdigit((unsigned char)c)) return std::nullopt;
        return std::stoi(t);
    };
    if (s[0] == 'q') {
        auto k = parse_int(s.substr(1));
        if (k && *k >= 1 && *k <= 6) return hypercube_graph(*k);
        return std::nullopt;
    }
    if (s[0] == 'k' || s[0] == 'c' || s[0] == 'p') {
        std::string rest = s.substr(1);
        size_t sep = rest.find_first_of(",x");
        if (sep != std::string::npos && s[0] == 'k') {
            auto p = parse_int(rest.substr(0, sep));
            auto q = parse_int(rest.substr(sep + 1));
            if (p && q && *p >= 1 && *q >= 1) return complete_bipartite(*p, *q);
            return std::nullopt;
        }
        auto v = parse_int(rest);
        if (!v || *v < 1) return std::nullopt;
        if (s[0] == 'k') return complete_graph(*v);
        if (s[0] == 'c') return *v >= 3 ? std::optional<graph>(cycle_graph(*v)) : std::nullopt;
        return path_graph(*v);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const graph& g) {
    if (g.n < 2 || g.edges.empty()) return std::nullopt;
    // 2-color by BFS, then verify all cross pairs present and no within-part edges
    std::vector<int> color((size_t)g.n, -1);
    std::vector<std::vector<int>> adj((size_t)g.n);
    for (auto [u, v] : g.edges) {
        adj[(size_t)u].push_back(v);
        adj[(size_t)v].push_back(u);
    }
    std::vector<int> stack;
    for (int s0 = 0; s0 < g.n; s0++) {
        if (color[(size_t)s0] >= 0) continue;
        color[(size_t)s0] = 0;
        stack.push_back(s0);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[(size_t)u]) {
                if (color[(size_t)v] < 0) {
                    color[(size_t)v] = 1 - color[(size_t)u];
                    stack.push_back(v);
                } else if (color[(size_t)v] == color[(size_t)u]) {
                    return std::nullopt;
                }
            }
        }
    }
    int p = 0;
    for (int c : color) p += (c == 0);
    int q = g.n - p;
    if (p == 0 || q == 0) return std::nullopt;
    if ((long long)g.m() != (long long)p * q) return std::nullopt;
    // isolated vertices would have been colored 0 arbitrarily; edge count check
    // only passes when the bipartition is genuinely complete
    for (auto [u, v] : g.edges)
        if (color[(size_t)u] == color[(size_t)v]) return std::nullopt;
    if (p > q) std::swap(p, q);
    return std::make_pair(p, q);
}

} // namespace corona
