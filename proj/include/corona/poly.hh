#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "corona/exact.hh"

namespace corona {

// univariate polynomial over exact rationals, coefficients ascending by degree.
// invariant: coeffs empty (zero polynomial) or leading coefficient nonzero.
struct poly {
    std::vector<Rat> c;

    poly() = default;
    explicit poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    const Rat& coeff(int k) const {
        static const Rat zero = 0;
        return (k >= 0 && k < (int)c.size()) ? c[(size_t)k] : zero;
    }
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool operator==(const poly& o) const { return c == o.c; }

    Rat eval(const Rat& x) const;
    double eval_d(double x) const;
};

poly poly_const(const Rat& a);
poly poly_x(); // the monomial x
// a + b*x convenience
poly poly_linear(const Rat& a, const Rat& b);

poly poly_add(const poly& a, const poly& b);
poly poly_sub(const poly& a, const poly& b);
poly poly_mul(const poly& a, const poly& b);
poly poly_scale(const poly& a, const Rat& s);
poly poly_neg(const poly& a);
poly poly_pow(const poly& a, int e);
poly poly_derivative(const poly& a);
// substitute g into f: f(g(x))
poly poly_compose(const poly& f, const poly& g);

// exact euclidean division; throws if divisor is zero
struct poly_divmod_result {
    poly quot, rem;
};
poly_divmod_result poly_divmod(const poly& a, const poly& b);
// division that must be exact (remainder zero) — throws otherwise
poly poly_div_exact(const poly& a, const poly& b);
// monic gcd
poly poly_gcd(poly a, poly b);
poly poly_monic(const poly& a);

// square-free decomposition: p = prod f_i^{m_i} with f_i square-free, pairwise coprime.
// returns (f_i, m_i) with deg f_i >= 1, ordered by multiplicity.
std::vector<std::pair<poly, int>> squarefree_decomposition(const poly& p);

// rational function, stored reduced with monic denominator
struct rational_fn {
    poly num, den;

    rational_fn() : den(poly_const(1)) {}
    rational_fn(poly n, poly d);

    rational_fn operator+(const rational_fn& o) const;
    rational_fn operator-(const rational_fn& o) const;
    rational_fn operator*(const rational_fn& o) const;
    bool operator==(const rational_fn& o) const { return num.c == o.num.c && den.c == o.den.c; }
    double eval_d(double x) const { return num.eval_d(x) / den.eval_d(x); }
};

// double-coefficient polynomial for factors whose parameters are irrational
struct poly_d {
    std::vector<double> c; // ascending

    int degree() const { return (int)c.size() - 1; }
    double eval(double x) const;
    double eval_derivative(double x) const;
};

poly_d to_poly_d(const poly& p);

// all-real root extraction (callers only pass characteristic-polynomial factors,
// which are real-rooted). exact multiplicities come from square-free structure.
struct root_set {
    std::vector<std::pair<double, int>> roots; // (value, multiplicity), ascending by value
    double residual = 0.0;                     // max |p(root)| over refined roots
};
root_set real_roots(const poly& p, double tol = 1e-10);
// numeric-only variant for low-degree double factors; multiplicities by clustering
root_set real_roots_d(const poly_d& p, double tol = 1e-10, double cluster_eps = 1e-7);

std::string rat_to_string(const Rat& r);
std::string poly_to_string(const poly& p); // human-readable, for logs and tables

} // namespace corona
