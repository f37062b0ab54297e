#pragma once
// Cospectral pair certification: exact cospectrality checks, exhaustive
// enumeration of small regular cospectral pairs, and the transfer
// constructions that turn one certified pair into a family of composite
// pairs.

#include <optional>
#include <string>
#include <vector>

#include "corona/graph.hh"
#include "corona/ops.hh"
#include "corona/poly.hh"
#include "corona/spectra.hh"

namespace corona {

// exact integer-polynomial equality of the kind-matrix charpolys;
// false immediately on order mismatch
bool is_cospectral(const graph& g1, const graph& g2, matrix_kind kind);

// exhaustive isomorphism decision via individualization + color refinement;
// throws std::invalid_argument when either graph has more than 12 vertices
bool is_isomorphic_small(const graph& g1, const graph& g2);

struct cospectral_certificate {
    matrix_kind kind{};
    poly shared_char_poly;
    std::string noniso_witness;
    bool heuristic_witness = false; // true when non-isomorphism is inherited,
                                    // not decided on the composites themselves
    graph a, b;
};

struct pair_check {
    bool cospectral = false;
    bool iso_decided = false;
    bool isomorphic = false; // meaningful when iso_decided
    std::optional<cospectral_certificate> certificate;
};

// `cospectral check`: exact cospectrality plus a non-isomorphism witness
// where one can be established (degree sequence, cross-kind charpoly,
// exhaustive search at n <= 12)
pair_check check_pair(const graph& a, const graph& b, matrix_kind kind);

enum class transfer_side { left, right };

// builds H op g1 and H op g2 (side=left; g_i op H for side=right), proves
// their cospectrality exactly, cross-checks the closed-form engine against
// explicitly computed charpolys, and attaches a non-isomorphism witness.
// throws std::invalid_argument on precondition violations: pair not regular
// with equal (n, r), pair not cospectral for `kind`, or pair isomorphic.
cospectral_certificate transfer_pair(const graph& h, const graph& g1, const graph& g2,
                                     corona_op op, matrix_kind kind, transfer_side side);

// exhaustive search for non-isomorphic A-cospectral connected regular pairs,
// scanning orders 3..max_n and all degrees; stops at the first (n, r) cell
// that yields a pair unless stop_at_first is false. max_n <= 12.
std::vector<cospectral_certificate> enumerate_cospectral_regular(int max_n,
                                                                 bool stop_at_first = true);

// exhaustive class counts, used to pin the enumeration against known values
long long count_regular_classes(int n, int r);          // connected classes
long long count_anchored_leaves(int n, int r, bool require_connected);

} // namespace corona
