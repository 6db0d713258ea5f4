#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "composita/composita.hpp"
#include "composita/errors.hpp"
#include "composita/stirling.hpp"
#include "test_support.hpp"

using namespace composita;
using composita::testing::px;
using composita::testing::q;
using composita::testing::ser;

namespace {

Series two_x_t_minus_t2(std::size_t order) { return ser(order, {0, px({0, 2}), -1}); }

Series t_plus_t2(std::size_t order) { return ser(order, {0, 1, 1}); }

}  // namespace

TEST_CASE("composita of 2xt - t^2 reproduces the printed triangle entries") {
    const Composita c = composita_from_powers(two_x_t_minus_t2(7), 7);
    CHECK(c.at(5, 3) == px({0, 6}));
    CHECK(c.at(7, 4) == px({0, -8}));
    CHECK(c.at(4, 3) == px({0, 0, -12}));
    CHECK(c.at(3, 2) == px({0, -4}));
    CHECK(c.at(7, 7) == XPoly::monomial(Rational(128), 7));
    CHECK(c.at(6, 3) == XPoly(-1));
    CHECK(c.at(4, 1).is_zero());
}

TEST_CASE("composita edge cases") {
    const Composita id = composita_from_powers(Series::t(6), 6);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t k = 1; k <= n; ++k) CHECK(id.at(n, k) == XPoly(n == k ? 1 : 0));
    }
    CHECK_THROWS_AS(id.at(3, 4), ArgumentError);
    CHECK_THROWS_AS(id.at(7, 1), ArgumentError);
    CHECK_THROWS_AS(id.at(2, 0), ArgumentError);
    CHECK_THROWS_AS(composita_from_powers(ser(4, {1, 1}), 4), DomainError);
    CHECK_THROWS_AS(composita_from_powers(Series::t(3), 4), ArgumentError);

    // (a t + b t^2)^2 with a = 2, b = 3: t^3 coefficient 2ab
    const Composita ab = composita_from_powers(ser(5, {0, 2, 3}), 5);
    CHECK(ab.at(3, 2) == XPoly(12));
}

TEST_CASE("composita_bruteforce") {
    CHECK(composita_bruteforce(two_x_t_minus_t2(5), 3, 2) == px({0, -4}));
    CHECK(composita_bruteforce(t_plus_t2(4), 4, 2) == XPoly(1));
    const Series f = ser(6, {0, px({1, 1}), 2, px({0, 0, 3})});
    CHECK(composita_bruteforce(f, 5, 5) == px({1, 1}).pow(5));
    CHECK_THROWS_AS(composita_bruteforce(f, 3, 4), ArgumentError);
    CHECK_THROWS_AS(composita_bruteforce(f, 0, 0), ArgumentError);
    CHECK_THROWS_AS(composita_bruteforce(ser(13, {0, 1}), 13, 2), ArgumentError);
}

TEST_CASE("composita algebra: scaling") {
    const Composita c = composita_from_powers(t_plus_t2(6), 6);
    CHECK(composita_scale_const(c, Rational(1)) == c);
    CHECK(composita_scale_const(c, Rational(-1)).at(3, 2) == c.at(3, 2));
    CHECK(composita_scale_const(composita_from_powers(Series::t(4), 4), Rational(2)).at(3, 3) == XPoly(8));

    CHECK(composita_scale_arg(c, Rational(1)) == c);
    CHECK(composita_scale_arg(composita_from_powers(Series::t(4), 4), Rational(3)).at(2, 2) == XPoly(9));
    // F(2t) built explicitly
    const Composita direct = composita_from_powers(ser(6, {0, 2, 4}), 6);
    CHECK(composita_scale_arg(c, Rational(2)) == direct);
}

TEST_CASE("composita algebra: product with a series") {
    const Composita c = composita_from_powers(Series::t(6), 6);
    CHECK(composita_mul_series(c, ser(6, {1}), 6) == c);
    const Composita with_one_plus_t = composita_mul_series(c, ser(6, {1, 1}), 6);
    const Composita with_geometric = composita_mul_series(c, ser(6, {1, 1, 1, 1, 1, 1, 1}), 6);
    for (long n = 1; n <= 6; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(with_one_plus_t.at(n, k) == XPoly(Rational(binomial(k, n - k))));
            CHECK(with_geometric.at(n, k) == XPoly(Rational(binomial(n - 1, k - 1))));
        }
    }
}

TEST_CASE("composita algebra: sum") {
    const std::size_t order = 7;
    const Composita f = composita_from_powers(ser(order, {0, px({0, 2})}), order);
    const Composita g = composita_from_powers(ser(order, {0, 0, -1}), order);
    const Composita sum = composita_add(f, g);
    CHECK(sum == composita_from_powers(two_x_t_minus_t2(order), order));
    CHECK(sum.at(4, 3) == px({0, 0, -12}));

    const Composita t = composita_from_powers(Series::t(5), 5);
    const Composita doubled = composita_add(t, t);
    for (long n = 1; n <= 5; ++n) {
        for (long k = 1; k <= n; ++k) CHECK(doubled.at(n, k) == XPoly(n == k ? Rational(2).pow(k) : Rational(0)));
    }
    CHECK_THROWS_AS(composita_add(t, Composita(5)), ArgumentError);
    CHECK_THROWS_AS(composita_add(t, composita_from_powers(Series::t(4), 4)), ArgumentError);
}

TEST_CASE("composita algebra: composition") {
    const std::size_t order = 6;
    const Composita identity = composita_from_powers(Series::t(order), order);
    const Composita f = composita_from_powers(t_plus_t2(order), order);
    CHECK(composita_compose(f, identity) == f);
    CHECK(composita_compose(identity, f) == f);

    const Composita expm1 = closed_composita(ClosedForm::expm1, {}, order);
    const Composita log1p = closed_composita(ClosedForm::log1p, {}, order);
    CHECK(composita_compose(expm1, log1p) == identity);
    CHECK(composita_compose(log1p, expm1) == identity);
    const Series t = Series::t(order);
    CHECK(composita_from_powers(series_log(series_exp(t)), order) == identity);

    const auto report = compose_orientation_report(8);
    CHECK(report.inner_rows_match);
    CHECK_FALSE(report.outer_rows_match);
    CHECK_THROWS_AS(composita_compose(f, Composita(5)), ArgumentError);
}

TEST_CASE("compose_coeffs") {
    const std::size_t order = 6;
    const Composita c = composita_from_powers(two_x_t_minus_t2(order), order);
    const std::vector<Rational> geometric(order + 1, Rational(1));
    const auto u = compose_coeffs(c, std::span<const Rational>(geometric));
    CHECK(u[2] == px({-1, 0, 4}));

    std::vector<Rational> unit(order + 1);
    unit[0] = 1;
    const auto a = compose_coeffs(c, std::span<const Rational>(unit));
    CHECK(a[0] == XPoly(1));
    for (std::size_t n = 1; n <= order; ++n) CHECK(a[n].is_zero());

    std::vector<Rational> id(order + 1);
    id[1] = 1;
    const auto b = compose_coeffs(c, std::span<const Rational>(id));
    for (std::size_t n = 1; n <= order; ++n) CHECK(b[n] == c.at(n, 1));

    CHECK_THROWS_AS(compose_coeffs(c, std::span<const Rational>(geometric).first(3)), ArgumentError);
}

TEST_CASE("closed catalog entries") {
    CHECK(closed_composita(ClosedForm::log1p, {}, 4).at(4, 2) == XPoly(q("11/12")));
    CHECK(closed_composita(ClosedForm::log1p, {}, 4).at(3, 2) == XPoly(-1));
    CHECK(closed_composita(ClosedForm::expm1, {}, 4).at(4, 2) == XPoly(q("7/12")));
    CHECK(closed_composita(ClosedForm::linear_quadratic, {}, 4).at(3, 2) == XPoly(2));
    CHECK(closed_composita("two_x_t_minus_t2", {}, 7).at(7, 4) == px({0, -8}));
    CHECK(closed_composita(ClosedForm::lambert_w, {}, 4).at(2, 1) == XPoly(-1));
    CHECK_THROWS_AS(closed_composita("tan", {}, 4), ArgumentError);
}

TEST_CASE("closed catalog agrees with powers of its series") {
    const std::size_t order = 9;
    for (ClosedForm form : kAllClosedForms) {
        for (const ClosedParams& params : {ClosedParams{}, ClosedParams{q("-2/3"), Rational(5)}}) {
            const Composita closed = closed_composita(form, params, order);
            CHECK_MESSAGE(closed == composita_from_powers(closed_series(form, params, order), order),
                          closed_form_name(form));
        }
    }
}

TEST_CASE("stirling numbers") {
    CHECK(stirling(StirlingKind::second, 4, 2) == 7);
    CHECK(stirling(StirlingKind::first, 4, 2) == 11);
    CHECK(stirling(StirlingKind::first, 6, 6) == 1);
    CHECK(stirling(StirlingKind::second, 6, 6) == 1);
    CHECK(stirling(StirlingKind::first, 0, 0) == 1);
    CHECK(stirling(StirlingKind::second, 5, 0) == 0);
    CHECK_THROWS_AS(stirling(StirlingKind::first, 3, 4), ArgumentError);
    CHECK_THROWS_AS(stirling(StirlingKind::second, -1, 0), ArgumentError);
    CHECK_THROWS_AS(stirling2_explicit(2, 3), ArgumentError);

    const StirlingTable first(StirlingKind::first, 12);
    const StirlingTable second(StirlingKind::second, 15);
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(first.at(n, 1) == factorial(static_cast<unsigned>(n - 1)));
        CHECK(second.at(n, 1) == 1);
        BigInt row_sum = 0;
        for (std::size_t k = 0; k <= n; ++k) row_sum += first.at(n, k);
        CHECK(row_sum == factorial(static_cast<unsigned>(n)));
    }
    for (long n = 0; n <= 15; ++n) {
        for (long k = 0; k <= n; ++k) CHECK(stirling2_explicit(n, k) == second.get(n, k));
    }
}

TEST_CASE("property: powers agree with composition enumeration") {
    composita::testing::RandomSource rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        const Series f = rng.series(8, true);
        const Composita c = composita_from_powers(f, 8);
        for (std::size_t n = 1; n <= 8; ++n) {
            CHECK(c.at(n, 1) == f[n]);
            CHECK(c.at(n, n) == f[1].pow(static_cast<unsigned>(n)));
            for (std::size_t k = 1; k <= n; ++k) CHECK(c.at(n, k) == composita_bruteforce(f, n, k));
        }
    }
}

TEST_CASE("property: algebra rules match direct construction") {
    composita::testing::RandomSource rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        const std::size_t order = 8;
        const Series f = rng.series(order, true, 1, 5);
        const Series g = rng.series(order, true, 1, 5);
        const Series b = rng.series(order, false, 1, 5);
        if (f.is_zero() || g.is_zero()) continue;
        const Composita cf = composita_from_powers(f, order);
        const Composita cg = composita_from_powers(g, order);
        const Rational alpha = rng.rational(7);

        CHECK(composita_scale_const(cf, alpha) == composita_from_powers(XPoly(alpha) * f, order));
        Series scaled_arg(order);
        {
            std::vector<XPoly> v(order + 1);
            for (std::size_t n = 0; n <= order; ++n) v[n] = f[n] * alpha.pow(static_cast<long>(n));
            scaled_arg = Series(order, v);
        }
        CHECK(composita_scale_arg(cf, alpha) == composita_from_powers(scaled_arg, order));
        CHECK(composita_mul_series(cf, b, order) == composita_from_powers(series_mul(f, b), order));
        CHECK(composita_add(cf, cg) == composita_from_powers(f + g, order));
        CHECK(composita_compose(cf, cg) == composita_from_powers(series_compose(f, g), order));

        std::vector<XPoly> r(order + 1);
        for (std::size_t n = 0; n <= order; ++n) r[n] = b[n];
        CHECK(compose_coeffs(cf, std::span<const XPoly>(r)) == series_compose(b, f).coeffs());
    }
}
