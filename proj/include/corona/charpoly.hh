#pragma once

#include "corona/exact.hh"
#include "corona/imat.hh"
#include "corona/poly.hh"

namespace corona {

// exact monic characteristic polynomial det(xI - M) of an integer matrix,
// Faddeev-LeVerrier over arbitrary-precision integers (the trace division by k
// is always exact). coefficients ascending.
poly char_poly_exact(const imat& m);

// same recurrence over int64 — only safe for small 0/1-entry matrices
// (n <= 10 adjacency stays within range). used by the enumeration hot path.
std::vector<long long> char_poly_i64(const imat& m);

// exact integer determinant, Bareiss fraction-free elimination
Int det_exact(const imat& m);

} // namespace corona
