#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "composita/rational.hpp"
#include "composita/series.hpp"
#include "composita/xpoly.hpp"

namespace composita::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

// Coefficients in increasing powers of x.
inline XPoly px(std::initializer_list<Rational> coeffs) { return XPoly(std::vector<Rational>(coeffs)); }

inline Series ser(std::size_t order, std::initializer_list<XPoly> coeffs) {
    std::vector<XPoly> v(coeffs);
    v.resize(order + 1);
    return Series(order, std::move(v));
}

class RandomSource {
public:
    explicit RandomSource(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    // numerator, denominator bounded by 100 in absolute value
    Rational rational(long bound = 100) { return Rational(BigInt(integer(-bound, bound)), BigInt(integer(1, bound))); }

    XPoly xpoly(long max_degree = 8, long bound = 100) {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
        for (auto& r : c) r = rational(bound);
        return XPoly(std::move(c));
    }

    // Sparse-ish series; zero constant term when requested.
    Series series(std::size_t order, bool zero_constant, long max_degree = 2, long bound = 9) {
        std::vector<XPoly> c(order + 1);
        for (std::size_t n = 0; n <= order; ++n) {
            if (n == 0 && zero_constant) continue;
            if (integer(0, 2) == 0) continue;
            c[n] = xpoly(max_degree, bound);
        }
        return Series(order, std::move(c));
    }

private:
    std::mt19937 gen_;
};

}  // namespace composita::testing
