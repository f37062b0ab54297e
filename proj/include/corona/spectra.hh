#pragma once
// Closed-form characteristic polynomials of the three corona-style products,
// for the adjacency, Laplacian, and signless-Laplacian matrices.
//
// Everything here works from two exact profiles rather than from the composite
// graph itself:
//   - regular_profile: order, size, degree and exact A-charpoly of G1
//   - copy_profile: order, M-charpoly and coronal of G2 for the chosen matrix
// Two inputs with equal profiles therefore produce bitwise-identical output,
// which is what makes the cospectrality transfer checks meaningful.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corona/graph.hh"
#include "corona/ops.hh"
#include "corona/poly.hh"

namespace corona {

enum class matrix_kind { adjacency, laplacian, signless };

const char* kind_letter(matrix_kind k); // "A", "L", "Q"
imat kind_matrix(matrix_kind k, const graph& g);

// coronal of M(G2): sum of all entries of (yI - M)^{-1}, as a rational
// function with monic denominator.
rational_fn coronal_regular(int n2, int r2, matrix_kind kind);
rational_fn coronal_kpq(int p, int q); // adjacency coronal of K_{p,q}

// polynomial P with P(A) = J for a connected r-regular graph on n vertices
// with the given distinct adjacency eigenvalues; throws std::invalid_argument
// if r is missing from the list or a value repeats.
poly hoffman_poly(const std::vector<Rat>& distinct_eigs, int n, int r);

struct regular_profile {
    int n = 0;
    int m = 0;
    int r = 0;
    poly fA; // exact adjacency charpoly
};
// throws std::invalid_argument unless g is connected and regular
regular_profile profile_of(const graph& g);

struct copy_profile {
    int n2 = 0;
    int r2 = -1;      // -1 when G2 is not regular
    poly fM2;         // exact charpoly of M(G2) for the chosen kind
    rational_fn chi;  // coronal of M(G2)
};
// throws std::invalid_argument when no closed coronal form applies
// (adjacency: regular or complete bipartite; signless: regular;
//  laplacian: any graph)
copy_profile copy_profile_of(const graph& g2, matrix_kind kind);

struct spectral_factor {
    poly p;             // exact factor, meaningful when `exact`
    poly_d pd;          // double-precision image, always usable
    bool exact = false;
    int mult = 1;
    std::string note;   // "perron", "lambda=-3", "lambda~-1.61803"
};

struct spectral_factorization {
    corona_op op{};
    matrix_kind kind{};
    std::string source_id;     // provenance tag, carried as data only
    int total_degree = 0;
    // roots of the explicit polynomial prefactor, (value, multiplicity)
    std::vector<std::pair<double, int>> explicit_eigs;
    std::vector<spectral_factor> factors;
    poly char_poly;            // exact characteristic polynomial, monic

    // every eigenvalue repeated per multiplicity, ascending
    std::vector<double> all_roots() const;
    // clustered (value, multiplicity) view of all_roots()
    std::vector<std::pair<double, int>> spectrum(double cluster_eps = 1e-7) const;
};

spectral_factorization spectrum_cvc(const regular_profile& g1p, const copy_profile& g2p,
                                    matrix_kind kind);
spectral_factorization spectrum_cec(const regular_profile& g1p, const copy_profile& g2p,
                                    matrix_kind kind);
spectral_factorization spectrum_cenc(const regular_profile& g1p, const copy_profile& g2p,
                                     matrix_kind kind);

// adjacency-kind specialization with G2 = K_{p,q}
spectral_factorization spectrum_kpq_variants(const regular_profile& g1p, int p, int q,
                                             corona_op op);

// dispatcher used by the sweep and the CLI
spectral_factorization corona_spectrum(corona_op op, matrix_kind kind, const graph& g1,
                                       const graph& g2);

} // namespace corona
