#include "doctest.h"

#include <cmath>

#include "corona/charpoly.hh"
#include "corona/oracle.hh"
#include "corona/spectra.hh"

using namespace corona;

TEST_CASE("hoffman polynomial anchors") {
    // K3,3: x(x+3)/3
    poly h = hoffman_poly({Rat(3), Rat(0), Rat(-3)}, 6, 3);
    CHECK(h.coeff(0) == Rat(0));
    CHECK(h.coeff(1) == Rat(1));
    CHECK(h.coeff(2) == Rat(1, 3));

    // K2: x+1
    poly h2 = hoffman_poly({Rat(1), Rat(-1)}, 2, 1);
    CHECK(h2.c == poly_linear(1, 1).c);

    // C4: x(x+2)/2
    poly h4 = hoffman_poly({Rat(2), Rat(0), Rat(-2)}, 4, 2);
    CHECK(h4.coeff(0) == Rat(0));
    CHECK(h4.coeff(1) == Rat(1));
    CHECK(h4.coeff(2) == Rat(1, 2));

    CHECK_THROWS_AS((void)hoffman_poly({Rat(1), Rat(1)}, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)hoffman_poly({Rat(0), Rat(-1)}, 2, 1), std::invalid_argument);
}

TEST_CASE("coronal closed forms") {
    rational_fn a = coronal_regular(5, 2, matrix_kind::adjacency);
    CHECK(a.num.c == poly_const(5).c);
    CHECK(a.den.c == poly_linear(-2, 1).c);

    rational_fn l = coronal_regular(7, 3, matrix_kind::laplacian);
    CHECK(l.num.c == poly_const(7).c);
    CHECK(l.den.c == poly_linear(0, 1).c);

    rational_fn q = coronal_regular(4, 2, matrix_kind::signless);
    CHECK(q.num.c == poly_const(4).c);
    CHECK(q.den.c == poly_linear(-4, 1).c);

    // K_{1,2}: (3y + 4)/(y^2 - 2)
    rational_fn kpq = coronal_kpq(1, 2);
    CHECK(kpq.num.c == poly_linear(4, 3).c);
    poly want_den = poly_add(poly_mul(poly_x(), poly_x()), poly_const(-2));
    CHECK(kpq.den.c == want_den.c);
}

TEST_CASE("coronal forms agree with the numeric solve") {
    struct probe {
        const char* name;
        matrix_kind kind;
    };
    const probe probes[] = {
        {"K3", matrix_kind::adjacency},  {"C4", matrix_kind::adjacency},
        {"P3", matrix_kind::adjacency},  {"K2,3", matrix_kind::adjacency},
        {"P3", matrix_kind::laplacian},  {"K2,3", matrix_kind::laplacian},
        {"K3", matrix_kind::signless},   {"C4", matrix_kind::signless},
    };
    for (const auto& pr : probes) {
        graph g = *named_graph(pr.name);
        copy_profile cp = copy_profile_of(g, pr.kind);
        imat m = kind_matrix(pr.kind, g);
        for (double y : {9.0, 11.5, 20.25}) {
            double sym = cp.chi.eval_d(y);
            double num = coronal_numeric(m, y);
            CHECK(std::fabs(sym - num) <= 1e-9 * std::max(1.0, std::fabs(sym)));
        }
    }
    // no closed coronal: non-regular, non-bipartite-complete adjacency; Q of non-regular
    graph paw = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK_THROWS_AS((void)copy_profile_of(paw, matrix_kind::adjacency), std::invalid_argument);
    CHECK_THROWS_AS((void)copy_profile_of(paw, matrix_kind::signless), std::invalid_argument);
    CHECK_NOTHROW((void)copy_profile_of(paw, matrix_kind::laplacian));
}

TEST_CASE("profile_of accepts connected regular graphs only") {
    regular_profile p = profile_of(*named_graph("petersen"));
    CHECK(p.n == 10);
    CHECK(p.m == 15);
    CHECK(p.r == 3);
    CHECK(p.fA.degree() == 10);
    CHECK_THROWS_AS((void)profile_of(path_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS((void)profile_of(make_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("closed charpoly equals the exact matrix charpoly on small cases") {
    struct probe {
        corona_op op;
        matrix_kind kind;
        const char* g1;
        const char* g2;
    };
    const probe probes[] = {
        {corona_op::cvc, matrix_kind::adjacency, "K3", "K1"},
        {corona_op::cec, matrix_kind::laplacian, "K3", "K2"},
        {corona_op::cenc, matrix_kind::signless, "K3", "K2"},
        {corona_op::cvc, matrix_kind::laplacian, "K2", "K3"}, // m1 < n1 branch
        {corona_op::cvc, matrix_kind::adjacency, "C4", "P3"}, // K_{p,q} coronal route
    };
    for (const auto& pr : probes) {
        graph g1 = *named_graph(pr.g1);
        graph g2 = *named_graph(pr.g2);
        spectral_factorization fac = corona_spectrum(pr.op, pr.kind, g1, g2);
        composite comp = build_composite(pr.op, g1, g2);
        poly truth = char_poly_exact(kind_matrix(pr.kind, comp.g));
        CHECK(fac.char_poly.c == truth.c);
        CHECK(fac.total_degree == comp.g.n);
    }
}

TEST_CASE("factorization accounting and root extraction") {
    graph g1 = *named_graph("K4");
    graph g2 = *named_graph("P3");
    spectral_factorization fac =
        corona_spectrum(corona_op::cvc, matrix_kind::laplacian, g1, g2);
    long long acc = 0;
    for (auto [v, m] : fac.explicit_eigs) acc += m;
    for (const auto& f : fac.factors)
        acc += (long long)f.mult * (f.exact ? f.p.degree() : f.pd.degree());
    CHECK(acc == fac.total_degree);
    CHECK((int)fac.all_roots().size() == fac.total_degree);

    // laplacian spectrum of a connected graph: one zero, rest positive
    auto roots = fac.all_roots();
    CHECK(roots.front() == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(roots[1] > 0.1);
}

TEST_CASE("kpq variant matches the generic dispatcher") {
    graph g1 = *named_graph("C4");
    spectral_factorization direct = spectrum_kpq_variants(profile_of(g1), 1, 2, corona_op::cec);
    spectral_factorization via =
        corona_spectrum(corona_op::cec, matrix_kind::adjacency, g1, *named_graph("K1,2"));
    CHECK(direct.char_poly.c == via.char_poly.c);
}

TEST_CASE("source identifiers ride along as data") {
    graph g1 = *named_graph("K4");
    graph g2 = *named_graph("K2");
    spectral_factorization fac =
        corona_spectrum(corona_op::cvc, matrix_kind::laplacian, g1, g2);
    CHECK(!fac.source_id.empty());
    spectral_factorization fbc =
        corona_spectrum(corona_op::cec, matrix_kind::adjacency, g1, g2);
    CHECK(!fbc.source_id.empty());
    CHECK(fac.source_id != fbc.source_id);
}

TEST_CASE("profile-only determinism") {
    // two isomorphic presentations of the same copy graph produce identical output
    graph p3 = path_graph(3);
    graph k12 = *named_graph("K1,2");
    graph g1 = *named_graph("K4");
    spectral_factorization a =
        corona_spectrum(corona_op::cenc, matrix_kind::laplacian, g1, p3);
    spectral_factorization b =
        corona_spectrum(corona_op::cenc, matrix_kind::laplacian, g1, k12);
    CHECK(a.char_poly.c == b.char_poly.c);
}
