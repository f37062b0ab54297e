#include "corona/poly.hh"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace corona {

Rat poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double poly::eval_d(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + to_double(c[i]);
    return acc;
}

poly poly_const(const Rat& a) { return poly({a}); }
poly poly_x() { return poly({Rat(0), Rat(1)}); }
poly poly_linear(const Rat& a, const Rat& b) { return poly({a, b}); }

poly poly_add(const poly& a, const poly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r[i] += b.c[i];
    return poly(std::move(r));
}

poly poly_sub(const poly& a, const poly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r[i] -= b.c[i];
    return poly(std::move(r));
}

poly poly_mul(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero()) return poly();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) r[i + j] += a.c[i] * b.c[j];
    }
    return poly(std::move(r));
}

poly poly_scale(const poly& a, const Rat& s) {
    if (s == 0) return poly();
    std::vector<Rat> r = a.c;
    for (auto& x : r) x *= s;
    return poly(std::move(r));
}

poly poly_neg(const poly& a) { return poly_scale(a, Rat(-1)); }

poly poly_pow(const poly& a, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    poly r = poly_const(1);
    poly base = a;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

poly poly_derivative(const poly& a) {
    if (a.c.size() <= 1) return poly();
    std::vector<Rat> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); i++) r[i - 1] = a.c[i] * (int)i;
    return poly(std::move(r));
}

poly poly_compose(const poly& f, const poly& g) {
    poly acc;
    for (size_t i = f.c.size(); i-- > 0;) {
        acc = poly_mul(acc, g);
        acc = poly_add(acc, poly_const(f.c[i]));
    }
    return acc;
}

poly_divmod_result poly_divmod(const poly& a, const poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    poly rem = a;
    if (a.degree() < b.degree()) return {poly(), rem};
    std::vector<Rat> q((size_t)(a.degree() - b.degree() + 1), Rat(0));
    const Rat lead = b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat f = rem.lead() / lead;
        q[(size_t)shift] = f;
        // rem -= f * x^shift * b
        for (size_t i = 0; i < b.c.size(); i++) rem.c[i + (size_t)shift] -= f * b.c[i];
        rem.trim();
    }
    return {poly(std::move(q)), rem};
}

poly poly_div_exact(const poly& a, const poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::runtime_error("poly_div_exact: nonzero remainder");
    return q;
}

poly poly_monic(const poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, Rat(1) / a.lead());
}

poly poly_gcd(poly a, poly b) {
    while (!b.is_zero()) {
        poly r = poly_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

std::vector<std::pair<poly, int>> squarefree_decomposition(const poly& p) {
    // Yun's algorithm over Q
    std::vector<std::pair<poly, int>> out;
    if (p.degree() < 1) return out;
    poly f = poly_monic(p);
    poly fp = poly_derivative(f);
    poly a = poly_gcd(f, fp);
    poly b = poly_div_exact(f, a);
    poly c = poly_div_exact(fp, a);
    poly d = poly_sub(c, poly_derivative(b));
    int mult = 1;
    while (b.degree() >= 1) {
        poly g = poly_gcd(b, d);
        if (g.degree() >= 1) out.push_back({g, mult});
        b = poly_div_exact(b, g);
        c = poly_div_exact(d, g);
        d = poly_sub(c, poly_derivative(b));
        mult++;
    }
    return out;
}

rational_fn::rational_fn(poly n, poly d) {
    if (d.is_zero()) throw std::invalid_argument("rational_fn: zero denominator");
    poly g = poly_gcd(n, d);
    if (g.degree() >= 1) {
        n = poly_div_exact(n, g);
        d = poly_div_exact(d, g);
    }
    Rat dl = d.lead();
    num = poly_scale(n, Rat(1) / dl);
    den = poly_scale(d, Rat(1) / dl);
}

rational_fn rational_fn::operator+(const rational_fn& o) const {
    return rational_fn(poly_add(poly_mul(num, o.den), poly_mul(o.num, den)), poly_mul(den, o.den));
}
rational_fn rational_fn::operator-(const rational_fn& o) const {
    return rational_fn(poly_sub(poly_mul(num, o.den), poly_mul(o.num, den)), poly_mul(den, o.den));
}
rational_fn rational_fn::operator*(const rational_fn& o) const {
    return rational_fn(poly_mul(num, o.num), poly_mul(den, o.den));
}

double poly_d::eval(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double poly_d::eval_derivative(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * (double)i;
    return acc;
}

poly_d to_poly_d(const poly& p) {
    poly_d r;
    r.c.reserve(p.c.size());
    for (const auto& q : p.c) r.c.push_back(to_double(q));
    return r;
}

namespace {

// companion-matrix eigenvalues of a monic-normalized double polynomial,
// followed by Newton refinement. callers guarantee all-real roots.
std::vector<double> companion_roots(const std::vector<double>& coeffs) {
    int deg = (int)coeffs.size() - 1;
    std::vector<double> roots;
    if (deg <= 0) return roots;
    double lead = coeffs[(size_t)deg];
    if (deg == 1) {
        roots.push_back(-coeffs[0] / lead);
        return roots;
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; i++) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; i++) comp(i, deg - 1) = -coeffs[(size_t)i] / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < deg; i++) roots.push_back(es.eigenvalues()(i).real());
    std::sort(roots.begin(), roots.end());
    return roots;
}

double newton_refine(const poly_d& p, double x0, int iters = 60) {
    double x = x0;
    for (int it = 0; it < iters; it++) {
        double f = p.eval(x);
        double fp = p.eval_derivative(x);
        if (std::abs(fp) < 1e-14 * std::max(1.0, std::abs(f))) break; // near a multiple root
        double step = f / fp;
        x -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

double max_abs_coeff(const poly_d& p) {
    double m = 0;
    for (double v : p.c) m = std::max(m, std::abs(v));
    return m > 0 ? m : 1.0;
}

} // namespace

root_set real_roots(const poly& p, double tol) {
    if (p.degree() < 1) throw std::invalid_argument("real_roots: degree must be >= 1");
    root_set rs;
    auto parts = squarefree_decomposition(p);
    for (const auto& [f, mult] : parts) {
        poly_d fd = to_poly_d(f);
        double scale = max_abs_coeff(fd);
        for (double x0 : companion_roots(fd.c)) {
            double x = newton_refine(fd, x0);
            double res = std::abs(fd.eval(x));
            if (res > tol * scale)
                throw std::runtime_error("real_roots: root refinement failed to converge");
            rs.residual = std::max(rs.residual, res);
            rs.roots.push_back({x, mult});
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

root_set real_roots_d(const poly_d& p, double tol, double cluster_eps) {
    if (p.degree() < 1) throw std::invalid_argument("real_roots_d: degree must be >= 1");
    root_set rs;
    double scale = max_abs_coeff(p);
    std::vector<double> vals;
    for (double x0 : companion_roots(p.c)) {
        double x = newton_refine(p, x0);
        double res = std::abs(p.eval(x));
        // multiple roots of a double-coefficient factor refine poorly; accept the
        // companion estimate in that case, the residual still bounds the error
        if (res > std::abs(p.eval(x0))) x = x0;
        rs.residual = std::max(rs.residual, std::abs(p.eval(x)));
        if (rs.residual > std::sqrt(tol) * scale)
            throw std::runtime_error("real_roots_d: refinement did not converge");
        vals.push_back(x);
    }
    std::sort(vals.begin(), vals.end());
    for (size_t i = 0; i < vals.size();) {
        size_t j = i + 1;
        double sum = vals[i];
        while (j < vals.size() && vals[j] - vals[j - 1] <= cluster_eps) sum += vals[j++];
        rs.roots.push_back({sum / (double)(j - i), (int)(j - i)});
        i = j;
    }
    return rs;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << "/" << rat_den(r);
    return os.str();
}

std::string poly_to_string(const poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; k--) {
        Rat a = p.coeff(k);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rat mag = a > 0 ? a : Rat(-a);
        if (mag != 1 || k == 0) os << rat_to_string(mag);
        if (k >= 1) {
            if (mag != 1) os << "*";
            os << "x";
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace corona
