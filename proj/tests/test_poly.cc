#include "doctest.h"

#include "corona/poly.hh"

using namespace corona;

TEST_CASE("poly basics and evaluation") {
    poly x = poly_x();
    poly p = poly_add(poly_mul(x, x), poly_linear(-6, 1)); // x^2 + x - 6
    CHECK(p.degree() == 2);
    CHECK(p.is_monic());
    CHECK(p.eval(Rat(2)) == Rat(0));
    CHECK(p.eval(Rat(-3)) == Rat(0));
    CHECK(p.eval(Rat(1, 2)) == Rat(-21, 4));
    CHECK(p.eval_d(2.0) == doctest::Approx(0.0));

    poly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(poly_add(p, poly_neg(p)).is_zero());
}

TEST_CASE("trim drops leading zeros") {
    poly p(std::vector<Rat>{Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(3) == Rat(0));
}

TEST_CASE("divmod, exact division, gcd") {
    poly p = poly_mul(poly_mul(poly_linear(-1, 1), poly_linear(-2, 1)), poly_linear(-3, 1));
    auto dm = poly_divmod(p, poly_linear(-2, 1));
    CHECK(dm.rem.is_zero());
    CHECK(dm.quot.degree() == 2);
    CHECK(poly_mul(dm.quot, poly_linear(-2, 1)).c == p.c);

    auto dm2 = poly_divmod(p, poly_linear(0, 1)); // remainder p(0) = -6
    CHECK(dm2.rem.degree() == 0);
    CHECK(dm2.rem.coeff(0) == Rat(-6));

    CHECK_THROWS_AS((void)poly_div_exact(p, poly_linear(-5, 1)), std::exception);

    poly a = poly_pow(poly_linear(-1, 1), 3);
    poly g = poly_gcd(poly_mul(a, poly_linear(7, 1)), poly_pow(poly_linear(-1, 1), 2));
    CHECK(g.c == poly_pow(poly_linear(-1, 1), 2).c);
}

TEST_CASE("pow, compose, derivative") {
    poly s = poly_pow(poly_linear(-1, 1), 4);
    CHECK(s.degree() == 4);
    CHECK(s.coeff(0) == Rat(1));
    CHECK(s.coeff(3) == Rat(-4));

    // (x^2 + 1) o (x - 3) = x^2 - 6x + 10
    poly f = poly_add(poly_mul(poly_x(), poly_x()), poly_const(1));
    poly c = poly_compose(f, poly_linear(-3, 1));
    CHECK(c.coeff(0) == Rat(10));
    CHECK(c.coeff(1) == Rat(-6));
    CHECK(c.coeff(2) == Rat(1));

    poly d = poly_derivative(s);
    CHECK(d.degree() == 3);
    CHECK(d.eval(Rat(1)) == Rat(0));
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^3 (x+2)
    poly p = poly_mul(poly_pow(poly_linear(-1, 1), 3), poly_linear(2, 1));
    auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].second == 1);
    CHECK(sf[0].first.c == poly_linear(2, 1).c);
    CHECK(sf[1].second == 3);
    CHECK(sf[1].first.c == poly_linear(-1, 1).c);
}

TEST_CASE("real roots with exact multiplicities") {
    poly p = poly_mul(poly_pow(poly_linear(-2, 1), 2), poly_linear(3, 1));
    root_set rs = real_roots(p);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].first == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(rs.roots[0].second == 1);
    CHECK(rs.roots[1].first == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rs.roots[1].second == 2);
    CHECK(rs.residual <= 1e-8);

    // x^3 - 6x + 3, the irrational factor showing up in the adjacency examples
    poly q(std::vector<Rat>{Rat(3), Rat(-6), Rat(0), Rat(1)});
    root_set qs = real_roots(q);
    int total = 0;
    double sum = 0;
    for (auto [v, m] : qs.roots) {
        total += m;
        sum += v * m;
    }
    CHECK(total == 3);
    CHECK(sum == doctest::Approx(0.0).epsilon(1e-9)); // trace: no x^2 term
}

TEST_CASE("rational_fn reduces and evaluates") {
    // 2x / 4x -> 1/2
    rational_fn r(poly_linear(0, 2), poly_linear(0, 4));
    CHECK(r.den.degree() == 0);
    CHECK(r.eval_d(7.0) == doctest::Approx(0.5));

    rational_fn a(poly_const(1), poly_linear(-1, 1)); // 1/(x-1)
    rational_fn b(poly_const(1), poly_linear(1, 1));  // 1/(x+1)
    rational_fn s = a + b;                            // 2x/(x^2-1)
    CHECK(s.num.c == poly_linear(0, 2).c);
    CHECK(s.den.c == poly_add(poly_mul(poly_x(), poly_x()), poly_const(-1)).c);
}

TEST_CASE("string forms") {
    CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
    CHECK(rat_to_string(Rat(4)) == "4");
    poly p(std::vector<Rat>{Rat(3), Rat(0), Rat(1)});
    CHECK(poly_to_string(p).find("x^2") != std::string::npos);
}
