// command-line front end: build composites, print spectra two ways, check
// invariants, run the closed-vs-numeric verification sweep, and work with
// cospectral pairs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "corona/charpoly.hh"
#include "corona/cospectral.hh"
#include "corona/graph.hh"
#include "corona/invariants.hh"
#include "corona/jsonout.hh"
#include "corona/oracle.hh"
#include "corona/ops.hh"
#include "corona/poly.hh"
#include "corona/reconcile.hh"
#include "corona/spectra.hh"

using namespace corona;

namespace {

// ---------------------------------------------------------------- helpers

graph load_graph(const std::string& src) {
    if (auto g = named_graph(src)) return *g;
    std::error_code ec;
    if (std::filesystem::is_regular_file(src, ec)) {
        std::ifstream in(src);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        try {
            return parse_edge_list(text);
        } catch (const parse_error&) {
        }
        try {
            std::string first;
            std::istringstream lines(text);
            while (std::getline(lines, first)) {
                while (!first.empty() && (first.back() == '\r' || first.back() == ' '))
                    first.pop_back();
                if (!first.empty()) break;
            }
            return parse_graph6(first);
        } catch (const parse_error&) {
        }
        throw std::invalid_argument("file '" + src +
                                    "' is neither an edge list nor graph6");
    }
    try {
        return parse_graph6(src);
    } catch (const parse_error&) {
    }
    throw std::invalid_argument("unknown graph source '" + src +
                                "' (not a named graph, a file, or graph6)");
}

corona_op parse_op(const std::string& s) {
    if (s == "cvc" || s == "central-vertex-corona") return corona_op::cvc;
    if (s == "cec" || s == "central-edge-corona") return corona_op::cec;
    if (s == "cenc" || s == "central-edge-neighborhood-corona") return corona_op::cenc;
    throw std::invalid_argument("unknown operation '" + s + "'");
}

matrix_kind parse_kind(const std::string& s) {
    if (s == "A" || s == "a" || s == "adjacency") return matrix_kind::adjacency;
    if (s == "L" || s == "l" || s == "laplacian") return matrix_kind::laplacian;
    if (s == "Q" || s == "q" || s == "signless") return matrix_kind::signless;
    throw std::invalid_argument("unknown matrix kind '" + s + "' (use A, L or Q)");
}

std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::pair<double, int>> cluster(const std::vector<double>& vals,
                                            double eps = 1e-7) {
    std::vector<std::pair<double, int>> out;
    for (double v : vals) {
        if (!out.empty() && std::fabs(v - out.back().first) <= eps)
            out.back().second++;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

jnode spectrum_json(const std::vector<std::pair<double, int>>& sp) {
    jnode arr = jnode::array();
    for (auto [v, m] : sp) {
        jnode e = jnode::object();
        e.set("value", jnode::num(v));
        e.set("multiplicity", jnode::inum(m));
        arr.push(std::move(e));
    }
    return arr;
}

void print_spectrum_table(const std::vector<std::pair<double, int>>& sp) {
    for (auto [v, m] : sp) std::printf("  %18.12g  x%d\n", v, m);
}

// can the closed engine handle this (g2, kind) pairing at all?
bool closed_form_applies(const graph& g2, matrix_kind kind) {
    switch (kind) {
        case matrix_kind::laplacian: return true;
        case matrix_kind::signless: return regularity(g2).is_regular;
        case matrix_kind::adjacency:
            return regularity(g2).is_regular || complete_bipartite_parts(g2).has_value();
    }
    return false;
}

// ---------------------------------------------------------------- build

int cmd_build(const std::string& op_str, const std::string& g1s, const std::string& g2s,
              const std::string& format) {
    graph g1 = load_graph(g1s);
    composite comp;
    std::string opname;
    long long want_n = 0, want_m = 0;
    if (op_str == "central") {
        comp = central_graph(g1);
        opname = "central-graph";
        want_n = g1.n + g1.m();
        long long nonadj = (long long)g1.n * (g1.n - 1) / 2 - g1.m();
        want_m = 2LL * g1.m() + nonadj;
    } else {
        corona_op op = parse_op(op_str);
        if (g2s.empty()) throw std::invalid_argument("--g2 is required for corona operations");
        graph g2 = load_graph(g2s);
        comp = build_composite(op, g1, g2);
        opname = corona_op_name(op);
        want_n = expected_order(op, g1, g2);
        want_m = expected_size(op, g1, g2);
    }
    bool ok = comp.g.n == want_n && comp.g.m() == want_m;

    if (format == "graph6") {
        std::printf("%s\n", write_graph6(comp.g).c_str());
    } else if (format == "dot") {
        std::printf("%s", to_dot(comp.g).c_str());
    } else if (format == "json") {
        jnode root = jnode::object();
        root.set("operation", jnode::str(opname));
        root.set("order", jnode::inum(comp.g.n));
        root.set("size", jnode::inum(comp.g.m()));
        root.set("predicted_order", jnode::inum(want_n));
        root.set("predicted_size", jnode::inum(want_m));
        root.set("prediction_matches", jnode::boolean(ok));
        jnode lay = jnode::object();
        lay.set("g1_vertices", jnode::inum(comp.layout.g1_vertices.size()));
        lay.set("subdivision_vertices", jnode::inum(comp.layout.subdivision_vertices.size()));
        lay.set("copies", jnode::inum((long long)comp.layout.copy_blocks.size()));
        root.set("layout", std::move(lay));
        root.set("graph6", jnode::str(write_graph6(comp.g)));
        std::printf("%s", root.dump().c_str());
    } else {
        std::printf("operation:        %s\n", opname.c_str());
        std::printf("order:            %d (predicted %lld)\n", comp.g.n, want_n);
        std::printf("size:             %d (predicted %lld)\n", comp.g.m(), want_m);
        std::printf("layout:           %d originals, %d subdivision, %zu copies\n",
                    comp.layout.g1_vertices.size(), comp.layout.subdivision_vertices.size(),
                    comp.layout.copy_blocks.size());
        std::printf("prediction:       %s\n", ok ? "matches" : "MISMATCH");
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const std::string& op_str, const std::string& kind_str,
                 const std::string& g1s, const std::string& g2s, const std::string& method,
                 const std::string& format, double tol) {
    corona_op op = parse_op(op_str);
    matrix_kind kind = parse_kind(kind_str);
    graph g1 = load_graph(g1s);
    graph g2 = load_graph(g2s);

    bool want_closed = method == "closed" || method == "both";
    bool want_numeric = method == "numeric" || method == "both";

    spectral_factorization fac;
    eigen_result er;
    if (want_closed) fac = corona_spectrum(op, kind, g1, g2);
    if (want_numeric) {
        composite comp = build_composite(op, g1, g2);
        er = symmetric_eigenvalues(kind_matrix(kind, comp.g));
    }

    double max_dev = 0.0;
    bool within = true;
    if (want_closed && want_numeric) {
        auto mc = multiset_equal(fac.all_roots(), er.values, tol);
        max_dev = mc.max_deviation;
        within = mc.equal;
    }

    if (format == "json") {
        jnode root = jnode::object();
        root.set("operation", jnode::str(corona_op_name(op)));
        root.set("kind", jnode::str(kind_letter(kind)));
        root.set("method", jnode::str(method));
        if (want_closed) {
            jnode cl = jnode::object();
            cl.set("source_id", jnode::str(fac.source_id));
            cl.set("total_degree", jnode::inum(fac.total_degree));
            jnode fs = jnode::array();
            for (const auto& f : fac.factors) {
                jnode fe = jnode::object();
                fe.set("note", jnode::str(f.note));
                fe.set("multiplicity", jnode::inum(f.mult));
                fe.set("degree",
                       jnode::inum(f.exact ? f.p.degree() : f.pd.degree()));
                if (f.exact) fe.set("polynomial", jnode::str(poly_to_string(f.p)));
                fs.push(std::move(fe));
            }
            cl.set("factors", std::move(fs));
            cl.set("explicit_eigenvalues", spectrum_json(fac.explicit_eigs));
            cl.set("spectrum", spectrum_json(fac.spectrum()));
            root.set("closed", std::move(cl));
        }
        if (want_numeric) {
            jnode nu = jnode::object();
            nu.set("residual", jnode::num(er.residual));
            nu.set("spectrum", spectrum_json(cluster(er.values)));
            root.set("numeric", std::move(nu));
        }
        if (want_closed && want_numeric) {
            root.set("max_deviation", jnode::num(max_dev));
            root.set("within_tolerance", jnode::boolean(within));
        }
        std::printf("%s", root.dump().c_str());
    } else {
        std::printf("operation: %s   kind: %s\n", corona_op_name(op), kind_letter(kind));
        if (want_closed) {
            std::printf("closed form (source: %s), degree %d\n", fac.source_id.c_str(),
                        fac.total_degree);
            for (const auto& f : fac.factors) {
                if (f.exact)
                    std::printf("  factor [%s] x%d: %s\n", f.note.c_str(), f.mult,
                                poly_to_string(f.p).c_str());
                else
                    std::printf("  factor [%s] x%d: degree %d (numeric)\n", f.note.c_str(),
                                f.mult, f.pd.degree());
            }
            if (!fac.explicit_eigs.empty()) {
                std::printf("  explicit eigenvalues:\n");
                print_spectrum_table(fac.explicit_eigs);
            }
            std::printf("closed spectrum:\n");
            print_spectrum_table(fac.spectrum());
        }
        if (want_numeric) {
            std::printf("numeric spectrum (residual %s):\n", fmt_double(er.residual).c_str());
            print_spectrum_table(cluster(er.values));
        }
        if (want_closed && want_numeric)
            std::printf("max deviation: %s (%s tolerance %g)\n", fmt_double(max_dev).c_str(),
                        within ? "within" : "EXCEEDS", tol);
    }
    return within ? 0 : 1;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const std::string& op_str, const std::string& g1s, const std::string& g2s,
                   const std::string& format, double tol) {
    corona_op op = parse_op(op_str);
    graph g1 = load_graph(g1s);
    graph g2 = load_graph(g2s);

    regular_profile p1 = profile_of(g1);
    copy_profile cp = copy_profile_of(g2, matrix_kind::laplacian);
    Int t_closed = spanning_trees_closed(p1, cp, op);
    Rat kf_closed = kirchhoff_closed(p1, cp, op);

    composite comp = build_composite(op, g1, g2);
    invariant_report orc = invariants_oracle(comp.g, corona_op_name(op));

    bool t_ok = t_closed == orc.spanning_trees;
    double kf_c = to_double(kf_closed);
    double kf_dev = std::fabs(kf_c - orc.kirchhoff) /
                    std::max(1.0, std::fabs(orc.kirchhoff));
    bool kf_ok = kf_dev <= std::max(tol, 1e-6);

    if (format == "json") {
        jnode root = jnode::object();
        root.set("operation", jnode::str(corona_op_name(op)));
        root.set("order", jnode::inum(comp.g.n));
        jnode cl = jnode::object();
        cl.set("spanning_trees", jnode::str(t_closed.str()));
        cl.set("kirchhoff", jnode::num(kf_c));
        cl.set("kirchhoff_exact", jnode::str(rat_to_string(kf_closed)));
        root.set("closed", std::move(cl));
        jnode orj = jnode::object();
        orj.set("spanning_trees", jnode::str(orc.spanning_trees.str()));
        orj.set("kirchhoff", jnode::num(orc.kirchhoff));
        root.set("oracle", std::move(orj));
        root.set("spanning_trees_match", jnode::boolean(t_ok));
        root.set("kirchhoff_relative_deviation", jnode::num(kf_dev));
        std::printf("%s", root.dump().c_str());
    } else {
        std::printf("operation: %s on %s, %s (order %d)\n", corona_op_name(op), g1s.c_str(),
                    g2s.c_str(), comp.g.n);
        std::printf("spanning trees:  closed %s\n", t_closed.str().c_str());
        std::printf("                 oracle %s   [%s]\n", orc.spanning_trees.str().c_str(),
                    t_ok ? "match" : "MISMATCH");
        std::printf("kirchhoff index: closed %s (= %s)\n", fmt_double(kf_c).c_str(),
                    rat_to_string(kf_closed).c_str());
        std::printf("                 oracle %s   [rel dev %s]\n",
                    fmt_double(orc.kirchhoff).c_str(), fmt_double(kf_dev).c_str());
    }
    return t_ok && kf_ok ? 0 : 1;
}

// ---------------------------------------------------------------- verify

struct sweep_case {
    corona_op op;
    matrix_kind kind;
    std::string g1, g2;
    double deviation = 0.0;
    bool ok = false;
};

std::vector<std::string> family_g1(const std::string& family, int max_n) {
    std::vector<std::string> out;
    if (family == "default") {
        for (int k = 3; k <= 8; k++) out.push_back("C" + std::to_string(k));
        out.insert(out.end(), {"K4", "K5", "K3,3", "petersen"});
    } else if (family == "cycles") {
        for (int k = 3; k <= max_n; k++) out.push_back("C" + std::to_string(k));
    } else if (family == "complete") {
        for (int k = 3; k <= max_n; k++) out.push_back("K" + std::to_string(k));
    } else if (family == "complete-bipartite") {
        for (int p = 2; 2 * p <= max_n; p++)
            out.push_back("K" + std::to_string(p) + "," + std::to_string(p));
    } else if (family == "cubes") {
        for (int d = 2; (1 << d) <= max_n; d++) out.push_back("Q" + std::to_string(d));
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    // order cap applies uniformly so --max-n subsets every family
    std::vector<std::string> kept;
    for (const auto& name : out) {
        auto g = named_graph(name);
        if (g && g->n <= max_n) kept.push_back(name);
    }
    if (kept.empty())
        throw std::invalid_argument("family '" + family + "' is empty under --max-n " +
                                    std::to_string(max_n));
    return kept;
}

int cmd_verify(const std::string& family, int max_n, const std::string& out_dir, double tol,
               unsigned long long seed) {
    const std::vector<std::string> g2_names = {"K1", "K2",  "K3", "P3",
                                               "C4", "K1,2", "K2,3"};
    const corona_op ops[] = {corona_op::cvc, corona_op::cec, corona_op::cenc};
    const matrix_kind kinds[] = {matrix_kind::adjacency, matrix_kind::laplacian,
                                 matrix_kind::signless};

    std::vector<std::string> g1_names = family_g1(family, max_n);
    std::vector<sweep_case> cases;
    double sweep_max = 0.0;
    int failures = 0;

    for (const auto& g1n : g1_names) {
        graph g1 = *named_graph(g1n);
        for (const auto& g2n : g2_names) {
            graph g2 = *named_graph(g2n);
            for (matrix_kind kind : kinds) {
                if (!closed_form_applies(g2, kind)) continue;
                for (corona_op op : ops) {
                    sweep_case sc{op, kind, g1n, g2n, 0.0, false};
                    spectral_factorization fac = corona_spectrum(op, kind, g1, g2);
                    composite comp = build_composite(op, g1, g2);
                    eigen_result er = symmetric_eigenvalues(kind_matrix(kind, comp.g));
                    auto mc = multiset_equal(fac.all_roots(), er.values, tol);
                    sc.deviation = mc.max_deviation;
                    sc.ok = mc.equal;
                    if (!sc.ok) failures++;
                    sweep_max = std::max(sweep_max, sc.deviation);
                    cases.push_back(std::move(sc));
                }
            }
        }
    }

    // coronal identity spot checks at seeded points above the spectrum
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double coronal_max = 0.0;
    long long coronal_checks = 0;
    for (const auto& g2n : g2_names) {
        graph g2 = *named_graph(g2n);
        for (matrix_kind kind : kinds) {
            if (!closed_form_applies(g2, kind)) continue;
            copy_profile cp = copy_profile_of(g2, kind);
            imat m2 = kind_matrix(kind, g2);
            double bound = 1.0;
            for (int i = 0; i < m2.rows; i++) {
                double s = 0;
                for (int j = 0; j < m2.cols; j++) s += std::fabs((double)m2.at(i, j));
                bound = std::max(bound, s);
            }
            for (int k = 0; k < 20; k++) {
                double y = bound + 0.5 + 10.0 * unif(rng);
                double num = coronal_numeric(m2, y);
                double sym = cp.chi.eval_d(y);
                coronal_max = std::max(coronal_max,
                                       std::fabs(num - sym) / std::max(1.0, std::fabs(sym)));
                coronal_checks++;
            }
        }
    }

    std::vector<reconciliation_entry> ledger = run_reconciliation();
    int printed_warnings = 0;
    int reconcile_failures = 0;
    for (const auto& e : ledger) {
        if (!e.printed_matches_derived) printed_warnings++;
        if (e.derived_deviation > std::max(tol, 1e-6) || e.oracle_verdict == "inconclusive")
            reconcile_failures++;
    }

    std::filesystem::create_directories(out_dir);
    std::string ledger_path = (std::filesystem::path(out_dir) / "deviations_ledger.json").string();
    {
        jnode root = jnode::object();
        root.set("version", jnode::inum(1));
        root.set("tool", jnode::str("corona verify"));
        root.set("family", jnode::str(family));
        root.set("max_n", jnode::inum(max_n));
        root.set("tolerance", jnode::num(tol));
        root.set("seed", jnode::inum((long long)seed));
        root.set("case_count", jnode::inum((long long)cases.size()));
        root.set("max_deviation", jnode::num(sweep_max));
        root.set("failure_count", jnode::inum(failures));
        jnode fails = jnode::array();
        for (const auto& sc : cases) {
            if (sc.ok) continue;
            jnode f = jnode::object();
            f.set("operation", jnode::str(corona_op_name(sc.op)));
            f.set("kind", jnode::str(kind_letter(sc.kind)));
            f.set("g1", jnode::str(sc.g1));
            f.set("g2", jnode::str(sc.g2));
            f.set("deviation", jnode::num(sc.deviation));
            fails.push(std::move(f));
        }
        root.set("failures", std::move(fails));
        jnode cor = jnode::object();
        cor.set("checks", jnode::inum(coronal_checks));
        cor.set("max_relative_deviation", jnode::num(coronal_max));
        root.set("coronal_identity", std::move(cor));
        root.set("printed_formula_warnings", jnode::inum(printed_warnings));
        jnode rec = jnode::array();
        for (const auto& e : ledger) {
            jnode je = jnode::object();
            je.set("source_id", jnode::str(e.source_id));
            je.set("item", jnode::str(e.item));
            je.set("instance", jnode::str(e.instance));
            je.set("printed", jnode::str(e.printed));
            je.set("derived", jnode::str(e.derived));
            je.set("printed_value", jnode::str(e.printed_value));
            je.set("derived_value", jnode::str(e.derived_value));
            je.set("printed_matches_derived", jnode::boolean(e.printed_matches_derived));
            je.set("oracle_verdict", jnode::str(e.oracle_verdict));
            je.set("derived_deviation", jnode::num(e.derived_deviation));
            je.set("printed_deviation", jnode::num(e.printed_deviation));
            je.set("note", jnode::str(e.note));
            rec.push(std::move(je));
        }
        root.set("reconciliation", std::move(rec));
        std::ofstream out(ledger_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + ledger_path);
        out << root.dump();
    }

    std::printf("verify: family=%s  cases=%zu  max deviation=%s  failures=%d\n", family.c_str(),
                cases.size(), fmt_double(sweep_max).c_str(), failures);
    std::printf("coronal identity: %lld checks, max relative deviation %s\n", coronal_checks,
                fmt_double(coronal_max).c_str());
    std::printf("formula reconciliation: %zu entries, %d printed-formula warnings\n",
                ledger.size(), printed_warnings);
    for (const auto& e : ledger) {
        if (e.printed_matches_derived) continue;
        std::printf("  warning: %s (%s): printed '%s' vs derived '%s' [%s]\n",
                    e.source_id.c_str(), e.item.c_str(), e.printed.c_str(), e.derived.c_str(),
                    e.oracle_verdict.c_str());
    }
    std::printf("ledger: %s\n", ledger_path.c_str());

    bool ok = failures == 0 && reconcile_failures == 0 && coronal_max <= 1e-6;
    std::printf("status: %s\n", ok ? "all derived routes confirmed"
                                   : "DERIVED-ROUTE MISMATCH");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- cospectral

int cmd_cospectral_check(const std::string& as, const std::string& bs,
                         const std::string& kind_str, const std::string& format) {
    matrix_kind kind = parse_kind(kind_str);
    graph a = load_graph(as);
    graph b = load_graph(bs);
    pair_check pc = check_pair(a, b, kind);

    std::string cert_state;
    if (!pc.cospectral)
        cert_state = "not cospectral";
    else if (pc.certificate)
        cert_state = "certificate";
    else if (pc.iso_decided && pc.isomorphic)
        cert_state = "rejected (isomorphic)";
    else
        cert_state = "rejected (no non-isomorphism witness)";

    if (format == "json") {
        jnode root = jnode::object();
        root.set("kind", jnode::str(kind_letter(kind)));
        root.set("cospectral", jnode::boolean(pc.cospectral));
        root.set("isomorphism_decided", jnode::boolean(pc.iso_decided));
        if (pc.iso_decided) root.set("isomorphic", jnode::boolean(pc.isomorphic));
        root.set("certificate", jnode::str(cert_state));
        if (pc.certificate)
            root.set("witness", jnode::str(pc.certificate->noniso_witness));
        std::printf("%s", root.dump().c_str());
    } else {
        std::printf("cospectral (%s): %s\n", kind_letter(kind), pc.cospectral ? "yes" : "no");
        if (pc.cospectral && pc.certificate)
            std::printf("certificate: non-isomorphic pair (%s)\n",
                        pc.certificate->noniso_witness.c_str());
        else if (pc.cospectral)
            std::printf("cospectral but %s\n", cert_state.c_str());
    }
    return pc.cospectral ? 0 : 1;
}

int cmd_cospectral_enumerate(int max_n, bool all, const std::string& format) {
    std::vector<cospectral_certificate> found = enumerate_cospectral_regular(max_n, !all);
    if (format == "json") {
        jnode root = jnode::object();
        root.set("max_n", jnode::inum(max_n));
        root.set("pairs_found", jnode::inum((long long)found.size()));
        jnode arr = jnode::array();
        for (const auto& c : found) {
            jnode e = jnode::object();
            e.set("order", jnode::inum(c.a.n));
            e.set("a", jnode::str(write_graph6(c.a)));
            e.set("b", jnode::str(write_graph6(c.b)));
            e.set("char_poly", jnode::str(poly_to_string(c.shared_char_poly)));
            e.set("witness", jnode::str(c.noniso_witness));
            arr.push(std::move(e));
        }
        root.set("pairs", std::move(arr));
        std::printf("%s", root.dump().c_str());
    } else {
        std::printf("connected regular A-cospectral non-isomorphic pairs, n <= %d: %zu\n",
                    max_n, found.size());
        for (const auto& c : found) {
            std::printf("  n=%d  %s  %s\n", c.a.n, write_graph6(c.a).c_str(),
                        write_graph6(c.b).c_str());
            std::printf("    shared charpoly: %s\n",
                        poly_to_string(c.shared_char_poly).c_str());
            std::printf("    witness: %s\n", c.noniso_witness.c_str());
        }
    }
    return found.empty() ? 1 : 0;
}

int cmd_cospectral_transfer(const std::string& hs, const std::string& pair_file,
                            const std::string& op_str, const std::string& kind_str,
                            const std::string& side_str, const std::string& format) {
    graph h = load_graph(hs);
    std::ifstream in(pair_file);
    if (!in) throw std::invalid_argument("cannot open pair file '" + pair_file + "'");
    std::vector<graph> pair;
    std::string line;
    while (std::getline(in, line) && pair.size() < 2) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        pair.push_back(parse_graph6(line));
    }
    if (pair.size() != 2)
        throw std::invalid_argument("pair file must hold two graph6 lines");

    corona_op op = parse_op(op_str);
    matrix_kind kind = parse_kind(kind_str);
    transfer_side side = side_str == "right" ? transfer_side::right : transfer_side::left;

    cospectral_certificate cert = transfer_pair(h, pair[0], pair[1], op, kind, side);

    if (format == "json") {
        jnode root = jnode::object();
        root.set("operation", jnode::str(corona_op_name(op)));
        root.set("kind", jnode::str(kind_letter(kind)));
        root.set("side", jnode::str(side == transfer_side::left ? "left" : "right"));
        root.set("composite_order", jnode::inum(cert.a.n));
        root.set("a", jnode::str(write_graph6(cert.a)));
        root.set("b", jnode::str(write_graph6(cert.b)));
        root.set("char_poly", jnode::str(poly_to_string(cert.shared_char_poly)));
        root.set("witness", jnode::str(cert.noniso_witness));
        root.set("witness_heuristic", jnode::boolean(cert.heuristic_witness));
        std::printf("%s", root.dump().c_str());
    } else {
        std::printf("transfer: %s / %s, pair in the %s slot\n", corona_op_name(op),
                    kind_letter(kind), side == transfer_side::left ? "copy" : "base");
        std::printf("composites on %d vertices are exactly cospectral\n", cert.a.n);
        std::printf("  a: %s\n  b: %s\n", write_graph6(cert.a).c_str(),
                    write_graph6(cert.b).c_str());
        std::printf("  shared charpoly: %s\n", poly_to_string(cert.shared_char_poly).c_str());
        std::printf("  witness: %s%s\n", cert.noniso_witness.c_str(),
                    cert.heuristic_witness ? " (heuristic)" : "");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-graph corona constructions, closed-form spectra and checks"};
    app.require_subcommand(1);

    double tol = 1e-8;
    unsigned long long seed = 12345;
    app.add_option("--tol", tol, "numeric tolerance for closed-vs-oracle comparisons")
        ->envname("CORONA_TOL");
    app.add_option("--seed", seed, "seed for sampled identity checks");

    std::string b_op, b_g1, b_g2, b_fmt = "table";
    auto* b = app.add_subcommand("build", "construct a composite graph");
    b->add_option("--op", b_op, "central | cvc | cec | cenc")->required();
    b->add_option("--g1", b_g1, "base graph (name, file, or graph6)")->required();
    b->add_option("--g2", b_g2, "copy graph (corona operations)");
    b->add_option("--format", b_fmt)->check(CLI::IsMember({"table", "json", "dot", "graph6"}));

    std::string s_op, s_kind = "A", s_g1, s_g2, s_method = "both", s_fmt = "table";
    auto* s = app.add_subcommand("spectrum", "eigenvalues of a composite, closed and numeric");
    s->add_option("--op", s_op, "cvc | cec | cenc")->required();
    s->add_option("--kind", s_kind, "A | L | Q");
    s->add_option("--g1", s_g1)->required();
    s->add_option("--g2", s_g2)->required();
    s->add_option("--method", s_method)->check(CLI::IsMember({"closed", "numeric", "both"}));
    s->add_option("--format", s_fmt)->check(CLI::IsMember({"table", "json"}));

    std::string i_op, i_g1, i_g2, i_fmt = "table";
    auto* iv = app.add_subcommand("invariants", "spanning trees and Kirchhoff index, two ways");
    iv->add_option("--op", i_op, "cvc | cec | cenc")->required();
    iv->add_option("--g1", i_g1)->required();
    iv->add_option("--g2", i_g2)->required();
    iv->add_option("--format", i_fmt)->check(CLI::IsMember({"table", "json"}));

    std::string v_family = "default", v_out = ".";
    int v_max_n = 10;
    auto* v = app.add_subcommand("verify",
                                 "closed-vs-oracle sweep plus formula reconciliation ledger");
    v->add_option("--family", v_family)
        ->check(CLI::IsMember({"default", "cycles", "complete", "complete-bipartite", "cubes"}));
    v->add_option("--max-n", v_max_n, "largest base-graph order to include");
    v->add_option("--out", v_out, "directory for deviations_ledger.json");

    auto* cs = app.add_subcommand("cospectral", "cospectral pair tools");
    cs->require_subcommand(1);
    std::string cc_a, cc_b, cc_kind = "A", cc_fmt = "table";
    auto* ccheck = cs->add_subcommand("check", "exact cospectrality of two graphs");
    ccheck->add_option("g1", cc_a)->required();
    ccheck->add_option("g2", cc_b)->required();
    ccheck->add_option("--kind", cc_kind);
    ccheck->add_option("--format", cc_fmt)->check(CLI::IsMember({"table", "json"}));

    int ce_max_n = 10;
    bool ce_regular = false, ce_all = false;
    std::string ce_fmt = "table";
    auto* cenum = cs->add_subcommand("enumerate",
                                     "exhaustive search for regular cospectral pairs");
    cenum->add_option("--max-n", ce_max_n)->check(CLI::Range(3, 12));
    cenum->add_flag("--regular", ce_regular, "restrict to regular graphs (always on)");
    cenum->add_flag("--all", ce_all, "keep scanning after the first hit");
    cenum->add_option("--format", ce_fmt)->check(CLI::IsMember({"table", "json"}));

    std::string ct_h, ct_pair, ct_op, ct_kind = "A", ct_side = "left", ct_fmt = "table";
    auto* ctr = cs->add_subcommand("transfer",
                                   "build cospectral composites from a certified pair");
    ctr->add_option("--companion", ct_h, "fixed companion graph h")->required();
    ctr->add_option("--pair", ct_pair, "file with two graph6 lines")->required();
    ctr->add_option("--op", ct_op, "cvc | cec | cenc")->required();
    ctr->add_option("--kind", ct_kind, "A | L | Q");
    ctr->add_option("--side", ct_side)->check(CLI::IsMember({"left", "right"}));
    ctr->add_option("--format", ct_fmt)->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (b->parsed()) return cmd_build(b_op, b_g1, b_g2, b_fmt);
        if (s->parsed()) return cmd_spectrum(s_op, s_kind, s_g1, s_g2, s_method, s_fmt, tol);
        if (iv->parsed()) return cmd_invariants(i_op, i_g1, i_g2, i_fmt, tol);
        if (v->parsed()) return cmd_verify(v_family, v_max_n, v_out, tol, seed);
        if (cs->parsed()) {
            if (ccheck->parsed()) return cmd_cospectral_check(cc_a, cc_b, cc_kind, cc_fmt);
            if (cenum->parsed()) return cmd_cospectral_enumerate(ce_max_n, ce_all, ce_fmt);
            if (ctr->parsed())
                return cmd_cospectral_transfer(ct_h, ct_pair, ct_op, ct_kind, ct_side, ct_fmt);
        }
    } catch (const parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
