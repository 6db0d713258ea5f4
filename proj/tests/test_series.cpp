#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "composita/errors.hpp"
#include "composita/series.hpp"
#include "test_support.hpp"

using namespace composita;
using composita::testing::px;
using composita::testing::q;
using composita::testing::ser;

namespace {

// U_{n+1} = 2x U_n - U_{n-1}
std::vector<XPoly> chebyshev_u_recurrence(std::size_t n_max) {
    std::vector<XPoly> u{XPoly(1), px({0, 2})};
    while (u.size() <= n_max) u.push_back(px({0, 2}) * u[u.size() - 1] - u[u.size() - 2]);
    return u;
}

// H_{n+1} = 2x H_n - 2n H_{n-1}
std::vector<XPoly> hermite_recurrence(std::size_t n_max) {
    std::vector<XPoly> h{XPoly(1), px({0, 2})};
    while (h.size() <= n_max) {
        const long n = static_cast<long>(h.size()) - 1;
        h.push_back(px({0, 2}) * h[h.size() - 1] - h[h.size() - 2] * Rational(2 * n));
    }
    return h;
}

const XPoly kTwoX = px({0, 2});

}  // namespace

TEST_CASE("series construction") {
    CHECK_THROWS_AS(Series(3, std::vector<XPoly>(2)), ArgumentError);
    CHECK(Series::t(3) == ser(3, {0, 1}));
    CHECK(Series::monomial(XPoly(5), 4, 3).is_zero());
    CHECK(ser(4, {0, 0, 3}).valuation() == 2u);
    CHECK_THROWS_AS(ser(2, {1}).truncate(3), ArgumentError);
    CHECK_THROWS_AS(ser(2, {1}) + ser(3, {1}), ArgumentError);
}

TEST_CASE("series_mul") {
    CHECK(series_mul(ser(2, {1, 1}), ser(2, {1, -1})) == ser(2, {1, 0, -1}));
    CHECK(series_mul(Series::t(3), Series::t(3)) == ser(3, {0, 0, 1}));
    const Series f = ser(4, {0, kTwoX, 1});
    CHECK(series_mul(f, f) == ser(4, {0, 0, px({0, 0, 4}), px({0, 4}), 1}));
    CHECK_THROWS_AS(series_mul(ser(2, {1}), ser(3, {1})), ArgumentError);
}

TEST_CASE("series_reciprocal") {
    CHECK(series_reciprocal(ser(3, {1, -1})) == ser(3, {1, 1, 1, 1}));
    CHECK(series_reciprocal(ser(2, {1})) == ser(2, {1}));
    const auto u = chebyshev_u_recurrence(8);
    const Series r = series_reciprocal(ser(8, {1, -kTwoX, 1}));
    for (std::size_t n = 0; n <= 8; ++n) CHECK(r[n] == u[n]);
    CHECK(series_reciprocal(ser(2, {2, 1})) == ser(2, {q("1/2"), q("-1/4"), q("1/8")}));
    CHECK_THROWS_AS(series_reciprocal(ser(2, {0, 1})), DomainError);
    CHECK_THROWS_AS(series_reciprocal(ser(2, {px({1, 1})})), DomainError);
}

TEST_CASE("series_exp") {
    CHECK(series_exp(Series(3)) == ser(3, {1}));
    CHECK(series_exp(Series::t(3)) == ser(3, {1, 1, q("1/2"), q("1/6")}));
    CHECK(series_exp(ser(2, {0, kTwoX, -1})) == ser(2, {1, kTwoX, px({-1, 0, 2})}));
    const auto h = hermite_recurrence(10);
    const Series e = series_exp(ser(10, {0, kTwoX, -1}));
    Rational fact(1);
    for (std::size_t n = 0; n <= 10; ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        CHECK(e[n] * fact == h[n]);
    }
    CHECK_THROWS_AS(series_exp(ser(2, {1, 1})), DomainError);
}

TEST_CASE("series_log") {
    CHECK(series_log(ser(3, {1, 1})) == ser(3, {0, 1, q("-1/2"), q("1/3")}));
    CHECK(series_log(ser(4, {1})) == Series(4));
    CHECK(series_log(series_exp(Series::t(4))) == Series::t(4));
    CHECK_THROWS_AS(series_log(ser(3, {2, 1})), DomainError);
    CHECK_THROWS_AS(series_log(ser(3, {0, 1})), DomainError);
}

TEST_CASE("series_pow_rat") {
    CHECK(series_pow_rat(ser(3, {1, -1}), Rational(-1)) == ser(3, {1, 1, 1, 1}));
    // (1-t)^(-1/2): C(2n,n)/4^n
    CHECK(series_pow_rat(ser(2, {1, -1}), q("-1/2")) == ser(2, {1, q("1/2"), q("3/8")}));
    CHECK(series_pow_rat(ser(3, {1, px({0, 1}), 7}), Rational(0)) == ser(3, {1}));
    CHECK_THROWS_AS(series_pow_rat(ser(3, {2, 1}), q("1/2")), DomainError);
    // (1+t)^x = sum C(x,n) t^n
    const Series bx = series_pow_xpoly(ser(4, {1, 1}), XPoly::x());
    for (std::size_t n = 0; n <= 4; ++n) CHECK(bx[n] == binom_x(Rational(0), static_cast<unsigned>(n)));
}

TEST_CASE("series_pow_int") {
    CHECK(series_pow_int(ser(3, {2, 1}), -1) == series_reciprocal(ser(3, {2, 1})));
    CHECK(series_pow_int(ser(3, {0, 1}), 2) == ser(3, {0, 0, 1}));
    CHECK(series_pow_int(ser(3, {5, 1}), 0) == ser(3, {1}));
}

TEST_CASE("series_compose") {
    const Series geometric = ser(4, {1, 1, 1, 1, 1});
    CHECK(series_compose(geometric, ser(4, {0, 0, 1})) == ser(4, {1, 0, 1, 0, 1}));
    const Series f = ser(4, {3, px({1, 1}), 0, q("2/5")});
    CHECK(series_compose(f, Series::t(4)) == f);
    CHECK(series_compose(ser(2, {1, 1, 1}), ser(2, {0, kTwoX, -1})) == ser(2, {1, kTwoX, px({-1, 0, 4})}));
    CHECK_THROWS_AS(series_compose(geometric, ser(4, {1, 1})), DomainError);
}

TEST_CASE("series_div_t_pow") {
    CHECK(series_div_t_pow(ser(2, {0, 1, 1}), 1) == ser(1, {1, 1}));
    const Series mercator = series_log(ser(4, {1, 1}));
    CHECK(series_div_t_pow(mercator, 1) == ser(3, {1, q("-1/2"), q("1/3"), q("-1/4")}));
    CHECK(series_div_t_pow(ser(3, {0, 0, 0, 1}), 3) == ser(0, {1}));
    CHECK_THROWS_AS(series_div_t_pow(ser(3, {0, 1}), 2), DomainError);
    CHECK_THROWS_AS(series_div_t_pow(ser(3, {0, 1}), 0), ArgumentError);
}

TEST_CASE("property: exp and log are inverse") {
    composita::testing::RandomSource rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t order = static_cast<std::size_t>(rng.integer(1, 10));
        const Series f = rng.series(order, true);
        CHECK(series_log(series_exp(f)) == f);
        const Series g = series_exp(f);
        CHECK(series_exp(series_log(g)) == g);
    }
}

TEST_CASE("property: rational powers add") {
    composita::testing::RandomSource rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t order = static_cast<std::size_t>(rng.integer(1, 8));
        Series f = rng.series(order, true) + Series::constant(XPoly(1), order);
        const Rational a = rng.rational(6), b = rng.rational(6);
        CHECK(series_mul(series_pow_rat(f, a), series_pow_rat(f, b)) == series_pow_rat(f, a + b));
    }
}

TEST_CASE("property: integer powers agree with repeated products") {
    composita::testing::RandomSource rng(13);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t order = static_cast<std::size_t>(rng.integer(1, 8));
        const Series f = rng.series(order, true) + Series::constant(XPoly(1), order);
        Series product = Series::constant(XPoly(1), order);
        for (long k = 0; k <= 5; ++k) {
            CHECK(series_pow_rat(f, Rational(k)) == product);
            product = series_mul(product, f);
        }
    }
}

TEST_CASE("property: composition is associative") {
    composita::testing::RandomSource rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t order = static_cast<std::size_t>(rng.integer(1, 8));
        const Series f = rng.series(order, false, 1, 5);
        const Series g = rng.series(order, true, 1, 5);
        const Series h = rng.series(order, true, 1, 5);
        CHECK(series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h)));
    }
}
