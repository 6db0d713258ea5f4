#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "composita/rational.hpp"
#include "composita/xpoly.hpp"

namespace composita {

/// Truncated power series sum_{n=0..order} c_n t^n with coefficients in Q[x].
/// Binary operations require both operands to have the same order.
class Series {
public:
    explicit Series(std::size_t order = 0);
    /// Throws ArgumentError unless coeffs.size() == order + 1.
    Series(std::size_t order, std::vector<XPoly> coeffs);

    static Series constant(const XPoly& c, std::size_t order);
    /// c t^power (zero when power > order).
    static Series monomial(const XPoly& c, std::size_t power, std::size_t order);
    static Series t(std::size_t order) { return monomial(XPoly(1), 1, order); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<XPoly>& coeffs() const noexcept { return coeffs_; }
    const XPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    const XPoly& constant_term() const { return coeffs_.front(); }

    /// Index of the first nonzero coefficient, if any.
    std::optional<std::size_t> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    Series truncate(std::size_t new_order) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    /// Coefficient-wise scaling by a polynomial in x.
    friend Series operator*(const XPoly& s, const Series& f);
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<XPoly> coeffs_;
};

Series series_mul(const Series& f, const Series& g);

/// Requires a nonzero rational constant term.
Series series_reciprocal(const Series& f);

/// Requires a zero constant term.
Series series_exp(const Series& f);

/// Requires constant term 1.
Series series_log(const Series& f);

/// exp(alpha log f); requires constant term 1.
Series series_pow_rat(const Series& f, const Rational& alpha);

/// exp(e(x) log f) for an exponent polynomial in x; requires constant term 1.
Series series_pow_xpoly(const Series& f, const XPoly& exponent);

/// Repeated multiplication (reciprocal first when exponent < 0).
Series series_pow_int(const Series& f, long exponent);

/// f(g(t)); requires g to have zero constant term.
Series series_compose(const Series& f, const Series& g);

/// f / t^m; the low m coefficients must vanish. Result order is order - m.
Series series_div_t_pow(const Series& f, std::size_t m);

}  // namespace composita
