#include "corona/invariants.hh"

#include <cmath>
#include <stdexcept>

#include "corona/charpoly.hh"
#include "corona/oracle.hh"

namespace corona {

tree_count spanning_trees_oracle(const graph& g) {
    tree_count out;
    out.connected = is_connected(g);
    if (!out.connected) {
        out.count = 0;
        return out;
    }
    if (g.n <= 1) {
        out.count = 1;
        return out;
    }
    imat l = laplacian_matrix(g);
    imat red(g.n - 1, g.n - 1);
    for (int i = 1; i < g.n; i++)
        for (int j = 1; j < g.n; j++) red.at(i - 1, j - 1) = l.at(i, j);
    out.count = det_exact(red);
    return out;
}

double kirchhoff_oracle(const graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("kirchhoff_oracle: graph is disconnected");
    if (g.n <= 1) return 0.0;
    eigen_result er = symmetric_eigenvalues(laplacian_matrix(g));
    // drop exactly the one near-zero eigenvalue; a second one would contradict
    // the combinatorial connectivity check above
    int zeros = 0;
    double sum = 0.0;
    for (double mu : er.values) {
        if (std::abs(mu) < 1e-7) {
            zeros++;
            continue;
        }
        sum += 1.0 / mu;
    }
    if (zeros != 1)
        throw std::runtime_error("kirchhoff_oracle: eigenvalue zero-count disagrees with "
                                 "connectivity");
    return (double)g.n * sum;
}

Int spanning_trees_from_charpoly(const poly& fL) {
    long long n = fL.degree();
    if (n < 1 || !fL.coeff(0).is_zero() || fL.coeff(1).is_zero())
        throw std::invalid_argument(
            "spanning_trees_from_charpoly: polynomial lacks the connected shape");
    Rat t = fL.coeff(1) / n;
    if (t < 0) t = -t;
    if (rat_den(t) != 1)
        throw std::logic_error("spanning_trees_from_charpoly: count is not an integer");
    return rat_num(t);
}

Rat kirchhoff_from_charpoly(const poly& fL) {
    long long n = fL.degree();
    if (n < 1 || !fL.coeff(0).is_zero() || fL.coeff(1).is_zero())
        throw std::invalid_argument(
            "kirchhoff_from_charpoly: polynomial lacks the connected shape");
    // f_L = c1 x + c2 x^2 + ...; Kf = -n * c2 / c1
    return Rat(-n) * fL.coeff(2) / fL.coeff(1);
}

namespace {
spectral_factorization laplacian_factorization(const regular_profile& g1p,
                                               const copy_profile& g2p, corona_op op) {
    switch (op) {
        case corona_op::cvc: return spectrum_cvc(g1p, g2p, matrix_kind::laplacian);
        case corona_op::cec: return spectrum_cec(g1p, g2p, matrix_kind::laplacian);
        case corona_op::cenc: return spectrum_cenc(g1p, g2p, matrix_kind::laplacian);
    }
    throw std::logic_error("laplacian_factorization: bad op");
}
} // namespace

Int spanning_trees_closed(const regular_profile& g1p, const copy_profile& g2p, corona_op op) {
    return spanning_trees_from_charpoly(laplacian_factorization(g1p, g2p, op).char_poly);
}

Rat kirchhoff_closed(const regular_profile& g1p, const copy_profile& g2p, corona_op op) {
    return kirchhoff_from_charpoly(laplacian_factorization(g1p, g2p, op).char_poly);
}

invariant_report invariants_oracle(const graph& g, const std::string& operation) {
    invariant_report rep;
    rep.method = "oracle";
    rep.operation = operation;
    tree_count tc = spanning_trees_oracle(g);
    rep.connected = tc.connected;
    rep.spanning_trees = tc.count;
    rep.kirchhoff = tc.connected ? kirchhoff_oracle(g) : 0.0;
    return rep;
}

invariant_report invariants_closed(const regular_profile& g1p, const copy_profile& g2p,
                                   corona_op op) {
    invariant_report rep;
    rep.method = "closed_form";
    rep.operation = corona_op_name(op);
    spectral_factorization fac = laplacian_factorization(g1p, g2p, op);
    rep.spanning_trees = spanning_trees_from_charpoly(fac.char_poly);
    rep.kirchhoff = to_double(kirchhoff_from_charpoly(fac.char_poly));
    rep.connected = true;
    return rep;
}

} // namespace corona
