#include "corona/spectra.hh"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "corona/charpoly.hh"
#include "corona/oracle.hh"

namespace corona {

const char* kind_letter(matrix_kind k) {
    switch (k) {
        case matrix_kind::adjacency: return "A";
        case matrix_kind::laplacian: return "L";
        case matrix_kind::signless: return "Q";
    }
    return "?";
}

imat kind_matrix(matrix_kind k, const graph& g) {
    switch (k) {
        case matrix_kind::adjacency: return adjacency_matrix(g);
        case matrix_kind::laplacian: return laplacian_matrix(g);
        case matrix_kind::signless: return signless_laplacian_matrix(g);
    }
    throw std::logic_error("kind_matrix: bad kind");
}

rational_fn coronal_regular(int n2, int r2, matrix_kind kind) {
    Rat shift = 0;
    switch (kind) {
        case matrix_kind::adjacency: shift = r2; break;
        case matrix_kind::laplacian: shift = 0; break;
        case matrix_kind::signless: shift = 2 * (long long)r2; break;
    }
    // n2 / (y - shift); for the laplacian this holds for any G2 because L*1=0
    return rational_fn{poly_const(n2), poly_linear(-shift, 1)};
}

rational_fn coronal_kpq(int p, int q) {
    // ((p+q) y + 2pq) / (y^2 - pq)
    poly num;
    num.c = {Rat(2LL * p * q), Rat(p + q)};
    poly den;
    den.c = {Rat(-(long long)p * q), Rat(0), Rat(1)};
    return rational_fn{num, den};
}

poly hoffman_poly(const std::vector<Rat>& distinct_eigs, int n, int r) {
    for (size_t i = 0; i < distinct_eigs.size(); i++)
        for (size_t j = i + 1; j < distinct_eigs.size(); j++)
            if (distinct_eigs[i] == distinct_eigs[j])
                throw std::invalid_argument("hoffman_poly: repeated eigenvalue in distinct list");
    bool has_r = false;
    for (const Rat& v : distinct_eigs) has_r = has_r || v == Rat(r);
    if (!has_r) throw std::invalid_argument("hoffman_poly: degree r not among eigenvalues");
    poly p = poly_const(n);
    Rat denom = 1;
    for (const Rat& v : distinct_eigs) {
        if (v == Rat(r)) continue;
        p = poly_mul(p, poly_linear(-v, 1));
        denom *= Rat(r) - v;
    }
    return poly_scale(p, Rat(1) / denom);
}

regular_profile profile_of(const graph& g) {
    auto reg = regularity(g);
    if (!reg.is_regular) throw std::invalid_argument("profile_of: graph is not regular");
    if (!is_connected(g)) throw std::invalid_argument("profile_of: graph is not connected");
    regular_profile p;
    p.n = g.n;
    p.m = g.m();
    p.r = reg.r;
    p.fA = char_poly_exact(adjacency_matrix(g));
    return p;
}

copy_profile copy_profile_of(const graph& g2, matrix_kind kind) {
    copy_profile cp;
    cp.n2 = g2.n;
    auto reg = regularity(g2);
    cp.r2 = reg.is_regular ? reg.r : -1;
    cp.fM2 = char_poly_exact(kind_matrix(kind, g2));
    switch (kind) {
        case matrix_kind::laplacian:
            cp.chi = coronal_regular(g2.n, 0, kind); // n2 / y, any G2
            return cp;
        case matrix_kind::signless:
            if (!reg.is_regular)
                throw std::invalid_argument(
                    "copy_profile_of: signless-laplacian coronal needs a regular copy graph");
            cp.chi = coronal_regular(g2.n, reg.r, kind);
            return cp;
        case matrix_kind::adjacency:
            if (reg.is_regular) {
                cp.chi = coronal_regular(g2.n, reg.r, kind);
                return cp;
            }
            if (auto pq = complete_bipartite_parts(g2)) {
                cp.chi = coronal_kpq(pq->first, pq->second);
                return cp;
            }
            throw std::invalid_argument(
                "copy_profile_of: adjacency coronal needs a regular or complete bipartite copy "
                "graph");
    }
    throw std::logic_error("copy_profile_of: bad kind");
}

namespace {

// identifiers for the upstream formula source; emitted as data in reports
const char* source_for(corona_op op, matrix_kind kind) {
    static const char* tab[3][3] = {
        {"Theorem 3.1", "Theorem 3.6", "Theorem 3.9"},
        {"Theorem 4.1", "Theorem 4.6", "Theorem 4.10"},
        {"Theorem 5.1", "Theorem 5.6", "Theorem 5.9"},
    };
    return tab[(int)op][(int)kind];
}

const char* source_for_kpq(corona_op op) {
    static const char* tab[3] = {"Corollary 3.4", "Corollary 4.4", "Corollary 5.4"};
    return tab[(int)op];
}

struct rational_eig {
    Rat value;
    int mult;
};

// exact integer eigenvalues of a monic integer-coefficient charpoly whose
// roots lie in [-bound, bound]; deflates them out of `rest`
std::vector<rational_eig> extract_integer_roots(poly& rest, int bound) {
    std::vector<rational_eig> out;
    for (int d = -bound; d <= bound; d++) {
        int mult = 0;
        while (rest.degree() >= 1 && rest.eval(Rat(d)).is_zero()) {
            rest = poly_div_exact(rest, poly_linear(Rat(-d), 1));
            mult++;
        }
        if (mult > 0) out.push_back({Rat(d), mult});
    }
    return out;
}

poly_d combine_d(const poly& u, const poly& v, double lambda) {
    poly_d ud = to_poly_d(u), vd = to_poly_d(v);
    poly_d out;
    out.c.assign(std::max(ud.c.size(), vd.c.size()), 0.0);
    for (size_t i = 0; i < ud.c.size(); i++) out.c[i] += ud.c[i];
    for (size_t i = 0; i < vd.c.size(); i++) out.c[i] += lambda * vd.c[i];
    return out;
}

std::string trim_double(double v) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

spectral_factorization assemble(corona_op op, matrix_kind kind, const regular_profile& g1p,
                                const copy_profile& g2p, std::string source_id) {
    const int n1 = g1p.n, m1 = g1p.m, r1 = g1p.r, n2 = g2p.n2;
    if (op != corona_op::cvc && m1 == 0)
        throw std::invalid_argument("corona spectrum: edge-indexed product needs m1 >= 1");
    const int c = (op == corona_op::cvc) ? n1 : m1;
    const int e = (op == corona_op::cec) ? m1 : n1;
    const long long N = (long long)n1 + m1 + (long long)c * n2;

    const int s_w = kind == matrix_kind::adjacency ? 0 : (op == corona_op::cenc ? 2 : 1);
    Rat s0 = 0;
    if (kind != matrix_kind::adjacency) s0 = (op == corona_op::cec) ? Rat(n2 + 2) : Rat(2);
    Rat d_v = 0;
    switch (op) {
        case corona_op::cvc: d_v = Rat(n1 - 1 + n2); break;
        case corona_op::cec: d_v = Rat(n1 - 1); break;
        case corona_op::cenc: d_v = Rat(n1 - 1 + (long long)n2 * r1); break;
    }
    const int sig = (kind == matrix_kind::laplacian) ? -1 : 1;

    poly shift = poly_linear(Rat(-s_w), 1); // x - s_w
    poly W = poly_compose(g2p.fM2, shift);
    poly cnx = poly_compose(g2p.chi.num, shift);
    poly cdx = poly_compose(g2p.chi.den, shift);
    poly Bn = (op == corona_op::cec)
                  ? poly_sub(poly_mul(poly_linear(-s0, 1), cdx), cnx)
                  : poly_linear(-s0, 1);

    auto base = [&](Rat kap) -> poly {
        switch (kind) {
            case matrix_kind::adjacency: return poly_linear(Rat(1) - kap, 1);
            case matrix_kind::laplacian: return poly_linear(-d_v - 1 + kap, 1);
            case matrix_kind::signless: return poly_linear(-d_v + 1 - kap, 1);
        }
        throw std::logic_error("bad kind");
    };
    auto uv = [&](Rat kap) -> std::pair<poly, poly> {
        poly b0 = base(kap);
        poly U, V;
        switch (op) {
            case corona_op::cvc:
                U = poly_sub(poly_mul(poly_sub(poly_mul(b0, cdx), cnx), Bn),
                             poly_scale(cdx, r1));
                V = poly_sub(poly_scale(poly_mul(cdx, Bn), sig), cdx);
                break;
            case corona_op::cec:
                U = poly_sub(poly_mul(b0, Bn), poly_scale(cdx, r1));
                V = poly_sub(poly_scale(Bn, sig), cdx);
                break;
            case corona_op::cenc:
                U = poly_sub(poly_sub(poly_mul(poly_mul(b0, cdx), Bn),
                                      poly_scale(poly_mul(cnx, Bn), r1)),
                             poly_scale(cdx, r1));
                V = poly_sub(poly_sub(poly_scale(poly_mul(cdx, Bn), sig), poly_mul(cnx, Bn)),
                             cdx);
                break;
        }
        return {U, V};
    };

    auto [U0, V0] = uv(0);
    auto [U1, V1] = uv(n1);
    poly negV0 = poly_neg(V0);

    // product over the whole G1 spectrum of (U0 + lambda V0), computed from
    // the charpoly coefficients alone
    std::vector<poly> pu((size_t)n1 + 1), pv((size_t)n1 + 1);
    pu[0] = pv[0] = poly_const(1);
    for (int k = 1; k <= n1; k++) {
        pu[(size_t)k] = poly_mul(pu[(size_t)k - 1], U0);
        pv[(size_t)k] = poly_mul(pv[(size_t)k - 1], negV0);
    }
    poly P_all;
    for (int k = 0; k <= n1; k++) {
        Rat ck = g1p.fA.coeff(k);
        if (ck.is_zero()) continue;
        P_all = poly_add(P_all, poly_scale(poly_mul(pu[(size_t)k], pv[(size_t)(n1 - k)]), ck));
    }

    poly q1k = poly_add(U1, poly_scale(V1, r1)); // Perron slot, kappa = n1
    poly q10 = poly_add(U0, poly_scale(V0, r1)); // same slot with kappa = 0

    poly num = poly_mul(poly_mul(poly_pow(W, c), P_all), q1k);
    poly den = poly_mul(q10, poly_pow(cdx, e));
    if (m1 >= n1)
        num = poly_mul(num, poly_pow(Bn, m1 - n1));
    else
        den = poly_mul(den, poly_pow(Bn, n1 - m1));

    spectral_factorization out;
    out.op = op;
    out.kind = kind;
    out.source_id = std::move(source_id);
    out.total_degree = (int)N;
    out.char_poly = poly_div_exact(num, den);
    if (out.char_poly.degree() != N || !out.char_poly.is_monic())
        throw std::logic_error("corona spectrum: assembled charpoly has wrong shape");

    // ---- displayed factorization ----
    poly G = poly_pow(W, c);
    std::vector<poly> leftovers;
    if (m1 >= n1) {
        G = poly_mul(G, poly_pow(Bn, m1 - n1));
    } else {
        for (int k = 0; k < n1 - m1; k++) leftovers.push_back(Bn);
    }
    for (int k = 0; k < e; k++) {
        auto dm = poly_divmod(G, cdx);
        if (dm.rem.is_zero())
            G = dm.quot;
        else
            leftovers.push_back(cdx);
    }

    // split the G1 spectrum into exact integer eigenvalues and a numeric rest
    poly rest = g1p.fA;
    auto int_eigs = extract_integer_roots(rest, r1);
    bool perron_found = false;
    for (auto& ie : int_eigs)
        if (ie.value == Rat(r1)) {
            ie.mult--;
            perron_found = true;
        }
    if (!perron_found)
        throw std::logic_error("corona spectrum: Perron eigenvalue missing from charpoly");

    out.factors.push_back({q1k, to_poly_d(q1k), true, 1, "perron"});
    for (const auto& ie : int_eigs) {
        if (ie.mult <= 0) continue;
        poly p = poly_add(U0, poly_scale(V0, ie.value));
        out.factors.push_back(
            {p, to_poly_d(p), true, ie.mult, "lambda=" + rat_to_string(ie.value)});
    }
    if (rest.degree() >= 1) {
        root_set rs = real_roots(rest);
        long long found = 0;
        for (auto [v, m] : rs.roots) found += m;
        if (found != rest.degree())
            throw std::logic_error("corona spectrum: complex eigenvalue in G1 spectrum?");
        for (auto [lam, m] : rs.roots)
            out.factors.push_back(
                {poly{}, combine_d(U0, V0, lam), false, m, "lambda~" + trim_double(lam)});
    }

    // denominators not cancelled by the prefactor divide one of the exact
    // per-eigenvalue factors instead (only reachable for tiny G1)
    for (const poly& piece : leftovers) {
        bool absorbed = false;
        for (size_t i = 0; i < out.factors.size() && !absorbed; i++) {
            auto& f = out.factors[i];
            if (!f.exact || f.p.degree() < piece.degree()) continue;
            auto dm = poly_divmod(f.p, piece);
            if (!dm.rem.is_zero()) continue;
            if (f.mult == 1) {
                f.p = dm.quot;
            } else {
                f.mult--;
                out.factors.push_back({dm.quot, to_poly_d(dm.quot), true, 1, f.note});
            }
            absorbed = true;
        }
        if (!absorbed)
            throw std::logic_error("corona spectrum: uncancelled coronal denominator");
    }
    for (auto& f : out.factors)
        if (f.exact) f.pd = to_poly_d(f.p);

    if (G.degree() >= 1) {
        root_set rs = real_roots(G);
        long long found = 0;
        for (auto [v, m] : rs.roots) found += m;
        if (found != G.degree())
            throw std::logic_error("corona spectrum: explicit prefactor has complex roots?");
        out.explicit_eigs = rs.roots;
    }

    long long acc = 0;
    for (auto [v, m] : out.explicit_eigs) acc += m;
    for (const auto& f : out.factors)
        acc += (long long)f.mult * (f.exact ? f.p.degree() : (long long)f.pd.c.size() - 1);
    if (acc != N) throw std::logic_error("corona spectrum: degree accounting failed");
    return out;
}

} // namespace

std::vector<double> spectral_factorization::all_roots() const {
    std::vector<double> out;
    for (auto [v, m] : explicit_eigs)
        for (int k = 0; k < m; k++) out.push_back(v);
    for (const auto& f : factors) {
        root_set rs = f.exact ? real_roots(f.p) : real_roots_d(f.pd);
        for (auto [v, m] : rs.roots)
            for (int k = 0; k < m * f.mult; k++) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<double, int>> spectral_factorization::spectrum(double cluster_eps) const {
    std::vector<double> flat = all_roots();
    std::vector<std::pair<double, int>> out;
    size_t i = 0;
    while (i < flat.size()) {
        size_t j = i;
        double sum = 0;
        while (j < flat.size() && flat[j] - flat[i] <= cluster_eps) sum += flat[j++];
        out.push_back({sum / (double)(j - i), (int)(j - i)});
        i = j;
    }
    return out;
}

spectral_factorization spectrum_cvc(const regular_profile& g1p, const copy_profile& g2p,
                                    matrix_kind kind) {
    return assemble(corona_op::cvc, kind, g1p, g2p, source_for(corona_op::cvc, kind));
}

spectral_factorization spectrum_cec(const regular_profile& g1p, const copy_profile& g2p,
                                    matrix_kind kind) {
    return assemble(corona_op::cec, kind, g1p, g2p, source_for(corona_op::cec, kind));
}

spectral_factorization spectrum_cenc(const regular_profile& g1p, const copy_profile& g2p,
                                     matrix_kind kind) {
    return assemble(corona_op::cenc, kind, g1p, g2p, source_for(corona_op::cenc, kind));
}

spectral_factorization spectrum_kpq_variants(const regular_profile& g1p, int p, int q,
                                             corona_op op) {
    if (p < 1 || q < 1) throw std::invalid_argument("spectrum_kpq_variants: parts must be >= 1");
    copy_profile cp;
    cp.n2 = p + q;
    cp.r2 = (p == q) ? p : -1;
    // adjacency charpoly of K_{p,q}: x^(p+q-2) (x^2 - pq)
    poly quad;
    quad.c = {Rat(-(long long)p * q), Rat(0), Rat(1)};
    poly xpow = poly_pow(poly_x(), p + q - 2);
    cp.fM2 = poly_mul(xpow, quad);
    cp.chi = coronal_kpq(p, q);
    return assemble(op, matrix_kind::adjacency, g1p, cp, source_for_kpq(op));
}

spectral_factorization corona_spectrum(corona_op op, matrix_kind kind, const graph& g1,
                                       const graph& g2) {
    regular_profile g1p = profile_of(g1);
    if (kind == matrix_kind::adjacency && !regularity(g2).is_regular) {
        if (auto pq = complete_bipartite_parts(g2))
            return spectrum_kpq_variants(g1p, pq->first, pq->second, op);
    }
    copy_profile g2p = copy_profile_of(g2, kind);
    return assemble(op, kind, g1p, g2p, source_for(op, kind));
}

} // namespace corona
