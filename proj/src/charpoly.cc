#include "corona/charpoly.hh"

namespace corona {

namespace {

// Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr(M_1);
// M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
// every trace division is exact over the integers.
template <class T>
std::vector<T> fl_charpoly(const imat& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    int n = m.rows;
    std::vector<T> coeffs((size_t)n + 1, T(0));
    coeffs[(size_t)n] = 1;
    if (n == 0) return coeffs;

    std::vector<T> M((size_t)n * (size_t)n), Mk((size_t)n * (size_t)n), tmp;
    for (size_t i = 0; i < M.size(); i++) M[i] = T(m.e[i]);
    Mk = M;

    for (int k = 1; k <= n; k++) {
        T tr = 0;
        for (int i = 0; i < n; i++) tr += Mk[(size_t)i * (size_t)n + (size_t)i];
        T ck = -tr / k;
        coeffs[(size_t)(n - k)] = ck;
        if (k == n) break;
        for (int i = 0; i < n; i++) Mk[(size_t)i * (size_t)n + (size_t)i] += ck;
        // Mk = M * Mk
        tmp.assign((size_t)n * (size_t)n, T(0));
        for (int i = 0; i < n; i++)
            for (int l = 0; l < n; l++) {
                const T& a = M[(size_t)i * (size_t)n + (size_t)l];
                if (a == 0) continue;
                for (int j = 0; j < n; j++)
                    tmp[(size_t)i * (size_t)n + (size_t)j] += a * Mk[(size_t)l * (size_t)n + (size_t)j];
            }
        Mk.swap(tmp);
    }
    return coeffs;
}

} // namespace

poly char_poly_exact(const imat& m) {
    auto ic = fl_charpoly<Int>(m);
    std::vector<Rat> rc(ic.size());
    for (size_t i = 0; i < ic.size(); i++) rc[i] = Rat(ic[i]);
    return poly(std::move(rc));
}

std::vector<long long> char_poly_i64(const imat& m) { return fl_charpoly<long long>(m); }

Int det_exact(const imat& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: matrix not square");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<Int> a((size_t)n * (size_t)n);
    for (size_t i = 0; i < a.size(); i++) a[i] = Int(m.e[i]);
    auto at = [&](int i, int j) -> Int& { return a[(size_t)i * (size_t)n + (size_t)j]; };

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; j++) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

} // namespace corona
