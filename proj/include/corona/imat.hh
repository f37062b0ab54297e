#pragma once

#include <stdexcept>
#include <vector>

namespace corona {

// dense integer matrix, row-major. construction-side objects are exact;
// conversion to floating point happens only inside the numeric oracle.
struct imat {
    int rows = 0, cols = 0;
    std::vector<long long> e;

    imat() = default;
    imat(int r, int c) : rows(r), cols(c), e((size_t)r * (size_t)c, 0) {}

    long long& at(int i, int j) { return e[(size_t)i * (size_t)cols + (size_t)j]; }
    long long at(int i, int j) const { return e[(size_t)i * (size_t)cols + (size_t)j]; }

    bool is_square() const { return rows == cols; }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; i++)
            for (int j = i + 1; j < cols; j++)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    long long trace() const {
        long long t = 0;
        for (int i = 0; i < rows && i < cols; i++) t += at(i, i);
        return t;
    }
    bool operator==(const imat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

inline imat imat_transpose(const imat& m) {
    imat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; i++)
        for (int j = 0; j < m.cols; j++) r.at(j, i) = m.at(i, j);
    return r;
}

inline imat imat_mul(const imat& a, const imat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("imat_mul: shape mismatch");
    imat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; i++)
        for (int k = 0; k < a.cols; k++) {
            long long aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols; j++) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

} // namespace corona
