#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "composita/rational.hpp"
#include "composita/series.hpp"
#include "composita/xpoly.hpp"

namespace composita {

/// Triangular array F(n,k), 1 <= k <= n <= order, where F(n,k) is the
/// coefficient of t^n in F(t)^k for a series F with zero constant term.
class Composita {
public:
    /// All-zero triangle of the given order.
    explicit Composita(std::size_t order = 0);

    std::size_t order() const noexcept { return rows_.size(); }

    /// Throws ArgumentError unless 1 <= k <= n <= order.
    const XPoly& at(std::size_t n, std::size_t k) const;
    XPoly& at(std::size_t n, std::size_t k);
    /// Zero outside the triangle.
    XPoly get(long n, long k) const;

    /// Row n as F(n,1..n).
    const std::vector<XPoly>& row(std::size_t n) const;

    /// The k = 1 column as a series: sum f(n) t^n.
    Series generating_series() const;

    friend bool operator==(const Composita& a, const Composita& b) = default;

private:
    std::vector<std::vector<XPoly>> rows_;
};

/// Entry (n,k) from the t^n coefficient of f^k, via incremental products.
/// Requires zero constant term and f.order() >= order.
Composita composita_from_powers(const Series& f, std::size_t order);

/// Sum over all compositions of n into exactly k positive parts of
/// f(l1) ... f(lk). Exponential; limited to 1 <= k <= n <= 12.
XPoly composita_bruteforce(const Series& f, std::size_t n, std::size_t k);

/// Composita of alpha F(t): alpha^k F(n,k).
Composita composita_scale_const(const Composita& c, const Rational& alpha);

/// Composita of F(alpha t): alpha^n F(n,k).
Composita composita_scale_arg(const Composita& c, const Rational& alpha);

/// Composita of F(t) B(t): sum_{i=k..n} F(i,k) B(n-i,k), B(m,k) = [t^m] B^k.
/// c.order() and b.order() must both be at least order.
Composita composita_mul_series(const Composita& c, const Series& b, std::size_t order);

/// Composita of F(t) + G(t) from the binomial expansion of (F+G)^k. The zero
/// series has no composita, so an all-zero operand is rejected.
Composita composita_add(const Composita& f, const Composita& g);

/// Composita of outer(inner(t)):
///   A(n,m) = sum_{k=m..n} inner(n,k) outer(k,m).
/// The row index runs through the inner function's composita; see
/// compose_orientation_report() for the empirical check of this orientation.
Composita composita_compose(const Composita& outer, const Composita& inner);

/// Coefficients of R(F(t)) from F's composita and R's coefficients:
/// a(0) = r(0), a(n) = sum_{k=1..n} F(n,k) r(k).
std::vector<XPoly> compose_coeffs(const Composita& f, std::span<const Rational> r);
std::vector<XPoly> compose_coeffs(const Composita& f, std::span<const XPoly> r);

enum class ClosedForm { linear_quadratic, rational_bt_1_minus_at, log1p, expm1, two_x_t_minus_t2, lambert_w };

struct ClosedParams {
    Rational a = 1;
    Rational b = 1;
};

/// Triangle filled from the closed formula of a catalogued generating function:
///   linear_quadratic        a t + b t^2      C(k,n-k) a^(2k-n) b^(n-k)
///   rational_bt_1_minus_at  b t / (1 - a t)  C(n-1,k-1) a^(n-k) b^k
///   log1p                   ln(1+t)          k!/n! s(n,k)   (signed first kind)
///   expm1                   e^t - 1          k!/n! {n,k}
///   two_x_t_minus_t2        2xt - t^2        C(k,n-k) 2^(2k-n) (-1)^(n-k) x^(2k-n)
///   lambert_w               W(t)             k n^(n-k-1) (-1)^(n-k) / (n-k)!
Composita closed_composita(ClosedForm form, const ClosedParams& params, std::size_t order);
Composita closed_composita(std::string_view name, const ClosedParams& params, std::size_t order);

/// The series each catalog entry describes, built from series primitives
/// (lambert_w from its own k = 1 column).
Series closed_series(ClosedForm form, const ClosedParams& params, std::size_t order);

ClosedForm closed_form_from_name(std::string_view name);
std::string_view closed_form_name(ClosedForm form);
inline constexpr ClosedForm kAllClosedForms[] = {ClosedForm::linear_quadratic, ClosedForm::rational_bt_1_minus_at,
                                                  ClosedForm::log1p,            ClosedForm::expm1,
                                                  ClosedForm::two_x_t_minus_t2, ClosedForm::lambert_w};

/// Which index pattern of the composition rule matches the composita of the
/// explicitly composed series.
struct OrientationReport {
    bool inner_rows_match = false;  // A(n,m) = sum inner(n,k) outer(k,m)
    bool outer_rows_match = false;  // A(n,m) = sum outer(n,k) inner(k,m)
    std::string summary;
};

/// Checks both orientations on outer = t + t^2 and inner = t + 2t^3, which do
/// not commute under composition.
OrientationReport compose_orientation_report(std::size_t order);

}  // namespace composita
