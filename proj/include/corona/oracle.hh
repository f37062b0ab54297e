#pragma once
// Dense symmetric eigensolver wrapper plus the small numeric checks the rest
// of the tool validates itself against.

#include <vector>

#include "corona/graph.hh"
#include "corona/poly.hh"

namespace corona {

struct eigen_result {
    std::vector<double> values; // ascending
    double residual = 0.0;      // max |(V D V^T - M)_ij|
};

// eigenvalues of a symmetric integer matrix; throws std::invalid_argument if
// the matrix is not square/symmetric
eigen_result symmetric_eigenvalues(const imat& m);

struct multiset_compare {
    bool equal = false;
    double max_deviation = 0.0;
};

// compares two sorted-or-not value lists as multisets under tolerance `tol`;
// throws std::invalid_argument when the lengths differ
multiset_compare multiset_equal(std::vector<double> a, std::vector<double> b, double tol);

bool is_connected(const graph& g);

// solves (y I - M(G2)) 1 = z and returns 1^T z, the coronal value at y.
// throws std::runtime_error if y is (numerically) an eigenvalue of M(G2).
double coronal_numeric(const imat& m2, double y);

} // namespace corona
