#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "composita/errors.hpp"
#include "composita/rational.hpp"
#include "composita/xpoly.hpp"
#include "test_support.hpp"

using namespace composita;
using composita::testing::px;
using composita::testing::q;

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(rat_arith(q("1/2"), q("1/3"), ArithOp::add) == q("5/6"));
    CHECK(rat_arith(q("-7/9"), q("0"), ArithOp::mul).to_string() == "0");
    CHECK(rat_arith(q("3/4"), q("3/4"), ArithOp::div).to_string() == "1");
    CHECK(rat_arith(q("1/6"), q("1/3"), ArithOp::sub) == q("-1/6"));

    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(-5)).to_string() == "0");
    CHECK(Rational(BigInt(0), BigInt(-5)).denominator() == 1);
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(rat_arith(q("1/2"), q("0"), ArithOp::div), ArithmeticError);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ArithmeticError);
    CHECK_THROWS_AS(Rational(0).pow(-1), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse("1/"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("a"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("-12/8").to_string() == "-3/2");
    CHECK(Rational::parse("42").to_string() == "42");
    CHECK(q("2/3").pow(3) == q("8/27"));
    CHECK(q("2/3").pow(-2) == q("9/4"));
}

TEST_CASE("generalized binomial") {
    CHECK(binom_generalized(Rational(3), 2) == Rational(3));
    CHECK(binom_generalized(q("1/2"), 2) == q("-1/8"));
    CHECK(binom_generalized(q("-7/3"), 0) == Rational(1));
    CHECK(binom_generalized(Rational(2), 5) == Rational(0));

    // factorial-table oracle
    std::vector<BigInt> fact{1};
    for (int i = 1; i <= 12; ++i) fact.push_back(fact.back() * i);
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Rational expected(fact[n], fact[k] * fact[n - k]);
            CHECK(binom_generalized(Rational(n), static_cast<unsigned>(k)) == expected);
            CHECK(Rational(binomial(n, k)) == expected);
        }
    }
}

TEST_CASE("xpoly arithmetic") {
    const XPoly two_x = px({0, 2});
    CHECK(xpoly_arith(two_x, two_x, PolyOp::mul) == px({0, 0, 4}));
    CHECK(xpoly_arith(px({-1, 0, 2}), XPoly(1), PolyOp::add) == px({0, 0, 2}));
    const XPoly x_minus_3 = px({-3, 1});
    CHECK(xpoly_arith(x_minus_3, x_minus_3, PolyOp::mul) == px({9, -6, 1}));
    CHECK(xpoly_arith(two_x, two_x, PolyOp::sub).is_zero());
    CHECK(xpoly_arith(two_x, two_x, PolyOp::sub).coeffs().empty());
    CHECK(px({1, 2, 0, 0}).degree() == 1);
    CHECK(XPoly().degree() == -1);
}

TEST_CASE("xpoly evaluation") {
    CHECK(xpoly_eval(px({0, -3, 0, 4}), Rational(1)) == Rational(1));
    CHECK(xpoly_eval(px({q("5/7"), 3, 9}), Rational(0)) == q("5/7"));
    CHECK(xpoly_eval(px({0, 0, 1}), q("1/2")) == q("1/4"));
}

TEST_CASE("xpoly printing") {
    CHECK(px({0, -3, 0, 4}).to_string() == "4x^3 - 3x");
    CHECK(px({q("-1/2"), 0, q("3/2")}).to_string() == "(3/2)x^2 - 1/2");
    CHECK(px({0, 9, -6, 1}).to_string() == "x^3 - 6x^2 + 9x");
    CHECK(px({0, -1}).to_string() == "-x");
    CHECK(XPoly().to_string() == "0");
}

TEST_CASE("binomials in x") {
    // C(x+2, 2) = (x+2)(x+1)/2
    CHECK(binom_x(Rational(2), 2) == px({1, q("3/2"), q("1/2")}));
    CHECK(binom_x(Rational(0), 0) == XPoly(1));
    CHECK(falling_factorial_x(3) == px({0, 2, -3, 1}));
    for (int k = 0; k <= 6; ++k) {
        for (int v = 0; v <= 8; ++v) {
            CHECK(binom_x(Rational(0), static_cast<unsigned>(k)).eval(Rational(v)) == Rational(binomial(v, k)));
        }
    }
}

TEST_CASE("property: ring axioms on random inputs") {
    composita::testing::RandomSource rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    for (int trial = 0; trial < 60; ++trial) {
        const XPoly p = rng.xpoly(), r = rng.xpoly(), s = rng.xpoly();
        CHECK((p + r) + s == p + (r + s));
        CHECK((p * r) * s == p * (r * s));
        CHECK(p + r == r + p);
        CHECK(p * r == r * p);
        CHECK(p * (r + s) == p * r + p * s);
        if (!p.is_zero() && !r.is_zero()) CHECK((p * r).degree() == p.degree() + r.degree());
        const Rational x0 = rng.rational(20);
        CHECK((p * r).eval(x0) == p.eval(x0) * r.eval(x0));
        CHECK((p + r).eval(x0) == p.eval(x0) + r.eval(x0));
        CHECK(p.compose(r).eval(x0) == p.eval(r.eval(x0)));
    }
}
