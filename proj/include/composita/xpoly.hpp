#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "composita/rational.hpp"

namespace composita {

/// Dense univariate polynomial in x over the rationals. coeffs()[i] is the
/// coefficient of x^i; trailing zeros are always stripped, so the zero
/// polynomial has no coefficients.
class XPoly {
public:
    XPoly() = default;
    XPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    XPoly(long c) : XPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    XPoly(int c) : XPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    explicit XPoly(std::vector<Rational> coeffs);

    /// c * x^power
    static XPoly monomial(const Rational& c, std::size_t power);
    static XPoly x() { return monomial(Rational(1), 1); }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^power (zero beyond the degree).
    Rational coeff(std::size_t power) const;
    Rational constant_term() const { return coeff(0); }

    Rational eval(const Rational& x0) const;
    /// p(q(x))
    XPoly compose(const XPoly& inner) const;
    XPoly pow(unsigned exponent) const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& other);
    XPoly& operator-=(const XPoly& other);
    XPoly& operator*=(const XPoly& other);
    XPoly& operator*=(const Rational& scalar);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const Rational& s) { return a *= s; }
    friend XPoly operator*(const Rational& s, XPoly a) { return a *= s; }
    friend bool operator==(const XPoly& a, const XPoly& b) = default;

    /// Human form in descending powers, e.g. "4x^3 - 3x", "(1/2)x^2 - 1/2".
    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const XPoly& p);

enum class PolyOp { add, sub, mul };

XPoly xpoly_arith(const XPoly& p, const XPoly& q, PolyOp op);
Rational xpoly_eval(const XPoly& p, const Rational& x0);

/// C(x + shift, k) = (x+shift)(x+shift-1)...(x+shift-k+1)/k! as a polynomial in x.
XPoly binom_x(const Rational& shift, unsigned k);

/// Falling factorial x(x-1)...(x-k+1).
XPoly falling_factorial_x(unsigned k);

}  // namespace composita
