#pragma once
// Spanning-tree counts and Kirchhoff indices, each computed two ways: an
// oracle route on the explicit graph (integer determinant / eigenvalue sum)
// and a closed-form route evaluated from the corona profiles alone.

#include <string>

#include "corona/exact.hh"
#include "corona/graph.hh"
#include "corona/poly.hh"
#include "corona/spectra.hh"

namespace corona {

struct tree_count {
    Int count;             // 0 when disconnected
    bool connected = false;
};

// determinant of the reduced laplacian, exact integer arithmetic
tree_count spanning_trees_oracle(const graph& g);

// n * sum of reciprocal nonzero laplacian eigenvalues; connectivity is checked
// combinatorially first, then exactly one eigenvalue with |mu| < 1e-7 is
// dropped. throws std::invalid_argument on disconnected input.
double kirchhoff_oracle(const graph& g);

// both invariants read off an exact laplacian characteristic polynomial:
// with f_L = x * g(x) and N = deg f_L,  t = |g(0)| / N  and
// Kf = -N * g'(0) / g(0). throws std::invalid_argument when the polynomial
// does not have the connected shape (exactly one zero root).
Int spanning_trees_from_charpoly(const poly& laplacian_charpoly);
Rat kirchhoff_from_charpoly(const poly& laplacian_charpoly);

// closed-form route: laplacian factorization of the composite from profiles
Int spanning_trees_closed(const regular_profile& g1p, const copy_profile& g2p_laplacian,
                          corona_op op);
Rat kirchhoff_closed(const regular_profile& g1p, const copy_profile& g2p_laplacian,
                     corona_op op);

struct invariant_report {
    Int spanning_trees;
    double kirchhoff = 0.0;
    bool connected = false;
    std::string method;    // "closed_form" or "oracle"
    std::string operation; // "plain" or a corona op name
};

invariant_report invariants_oracle(const graph& g, const std::string& operation = "plain");
invariant_report invariants_closed(const regular_profile& g1p, const copy_profile& g2p_laplacian,
                                   corona_op op);

} // namespace corona
