#include "composita/composita.hpp"

#include <functional>
#include <string>

#include "composita/errors.hpp"
#include "composita/stirling.hpp"

namespace composita {

namespace {

void require_same_order(const Composita& a, const Composita& b, const char* op) {
    if (a.order() != b.order()) {
        throw ArgumentError(std::string(op) + ": composita orders differ (" + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()) + ")");
    }
}

bool is_zero_composita(const Composita& c) {
    for (std::size_t n = 1; n <= c.order(); ++n) {
        if (!c.at(n, 1).is_zero()) return false;
    }
    return true;
}

Rational pow_int(const Rational& base, long exponent) { return base.pow(exponent); }

}  // namespace

Composita::Composita(std::size_t order) : rows_(order) {
    for (std::size_t n = 1; n <= order; ++n) rows_[n - 1].resize(n);
}

const XPoly& Composita::at(std::size_t n, std::size_t k) const {
    if (k < 1 || k > n || n > order()) {
        throw ArgumentError("composita entry (" + std::to_string(n) + "," + std::to_string(k) +
                            ") outside 1 <= k <= n <= " + std::to_string(order()));
    }
    return rows_[n - 1][k - 1];
}

XPoly& Composita::at(std::size_t n, std::size_t k) {
    return const_cast<XPoly&>(static_cast<const Composita&>(*this).at(n, k));
}

XPoly Composita::get(long n, long k) const {
    if (k < 1 || k > n || n > static_cast<long>(order())) return {};
    return rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1];
}

const std::vector<XPoly>& Composita::row(std::size_t n) const {
    if (n < 1 || n > order()) throw ArgumentError("composita row " + std::to_string(n) + " out of range");
    return rows_[n - 1];
}

Series Composita::generating_series() const {
    std::vector<XPoly> coeffs(order() + 1);
    for (std::size_t n = 1; n <= order(); ++n) coeffs[n] = at(n, 1);
    return Series(order(), std::move(coeffs));
}

Composita composita_from_powers(const Series& f, std::size_t order) {
    if (f.order() < order) {
        throw ArgumentError("composita of order " + std::to_string(order) + " needs a series of order >= " +
                            std::to_string(order));
    }
    if (!f.constant_term().is_zero()) {
        throw DomainError("composita: generating function has nonzero constant term " + f.constant_term().to_string());
    }
    const Series base = f.truncate(order);
    Composita c(order);
    Series power = base;
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t n = k; n <= order; ++n) c.at(n, k) = power[n];
        if (k < order) power = series_mul(power, base);
    }
    return c;
}

XPoly composita_bruteforce(const Series& f, std::size_t n, std::size_t k) {
    if (k < 1 || k > n || n > 12) {
        throw ArgumentError("brute-force composita needs 1 <= k <= n <= 12, got (" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
    }
    if (f.order() < n) throw ArgumentError("brute-force composita: series order below n");
    XPoly total;
    // Depth-first walk over compositions of `remaining` into `parts` positive parts.
    std::function<void(std::size_t, std::size_t, const XPoly&)> walk = [&](std::size_t remaining, std::size_t parts,
                                                                          const XPoly& product) {
        if (parts == 0) {
            if (remaining == 0) total += product;
            return;
        }
        for (std::size_t part = 1; part + (parts - 1) <= remaining; ++part) {
            if (f[part].is_zero()) continue;
            walk(remaining - part, parts - 1, product * f[part]);
        }
    };
    walk(n, k, XPoly(1));
    return total;
}

Composita composita_scale_const(const Composita& c, const Rational& alpha) {
    Composita out = c;
    for (std::size_t n = 1; n <= c.order(); ++n) {
        for (std::size_t k = 1; k <= n; ++k) out.at(n, k) = c.at(n, k) * pow_int(alpha, static_cast<long>(k));
    }
    return out;
}

Composita composita_scale_arg(const Composita& c, const Rational& alpha) {
    Composita out = c;
    for (std::size_t n = 1; n <= c.order(); ++n) {
        const Rational w = pow_int(alpha, static_cast<long>(n));
        for (std::size_t k = 1; k <= n; ++k) out.at(n, k) = c.at(n, k) * w;
    }
    return out;
}

Composita composita_mul_series(const Composita& c, const Series& b, std::size_t order) {
    if (c.order() < order || b.order() < order) {
        throw ArgumentError("composita_mul_series: operands must have order >= " + std::to_string(order));
    }
    const Series base = b.truncate(order);
    Composita out(order);
    Series power = base;  // B(t)^k
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t n = k; n <= order; ++n) {
            XPoly acc;
            for (std::size_t i = k; i <= n; ++i) acc += c.at(i, k) * power[n - i];
            out.at(n, k) = acc;
        }
        if (k < order) power = series_mul(power, base);
    }
    return out;
}

Composita composita_add(const Composita& f, const Composita& g) {
    require_same_order(f, g, "composita_add");
    if (is_zero_composita(f) || is_zero_composita(g)) {
        throw ArgumentError("composita_add: the zero generating function has no composita");
    }
    const std::size_t order = f.order();
    Composita out(order);
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            XPoly acc = f.at(n, k) + g.at(n, k);
            for (std::size_t j = 1; j + 1 <= k; ++j) {
                XPoly cross;
                // i in [j, n-k+j]; empty when k = 1
                for (std::size_t i = j; i + k <= n + j; ++i) cross += f.get(static_cast<long>(i), static_cast<long>(j)) *
                                                                   g.get(static_cast<long>(n - i), static_cast<long>(k - j));
                acc += cross * Rational(binomial(static_cast<long>(k), static_cast<long>(j)));
            }
            out.at(n, k) = acc;
        }
    }
    return out;
}

Composita composita_compose(const Composita& outer, const Composita& inner) {
    require_same_order(outer, inner, "composita_compose");
    const std::size_t order = outer.order();
    Composita out(order);
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            XPoly acc;
            for (std::size_t k = m; k <= n; ++k) acc += inner.at(n, k) * outer.at(k, m);
            out.at(n, m) = acc;
        }
    }
    return out;
}

namespace {

template <typename Coeff>
std::vector<XPoly> compose_coeffs_impl(const Composita& f, std::span<const Coeff> r) {
    if (r.size() < f.order() + 1) {
        throw ArgumentError("compose_coeffs: need " + std::to_string(f.order() + 1) + " outer coefficients, got " +
                            std::to_string(r.size()));
    }
    std::vector<XPoly> a(f.order() + 1);
    a[0] = XPoly(r[0]);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        XPoly acc;
        for (std::size_t k = 1; k <= n; ++k) acc += f.at(n, k) * XPoly(r[k]);
        a[n] = acc;
    }
    return a;
}

}  // namespace

std::vector<XPoly> compose_coeffs(const Composita& f, std::span<const Rational> r) { return compose_coeffs_impl(f, r); }
std::vector<XPoly> compose_coeffs(const Composita& f, std::span<const XPoly> r) { return compose_coeffs_impl(f, r); }

ClosedForm closed_form_from_name(std::string_view name) {
    for (ClosedForm form : kAllClosedForms) {
        if (closed_form_name(form) == name) return form;
    }
    throw ArgumentError("unknown closed composita '" + std::string(name) + "'");
}

std::string_view closed_form_name(ClosedForm form) {
    switch (form) {
        case ClosedForm::linear_quadratic: return "linear_quadratic";
        case ClosedForm::rational_bt_1_minus_at: return "rational_bt_1_minus_at";
        case ClosedForm::log1p: return "log1p";
        case ClosedForm::expm1: return "expm1";
        case ClosedForm::two_x_t_minus_t2: return "two_x_t_minus_t2";
        case ClosedForm::lambert_w: return "lambert_w";
    }
    return "?";
}

Composita closed_composita(ClosedForm form, const ClosedParams& params, std::size_t order) {
    const StirlingPair stirling(order);
    Composita c(order);
    for (std::size_t un = 1; un <= order; ++un) {
        for (std::size_t uk = 1; uk <= un; ++uk) {
            const auto n = static_cast<long>(un);
            const auto k = static_cast<long>(uk);
            XPoly value;
            switch (form) {
                case ClosedForm::linear_quadratic:
                    if (2 * k >= n) {
                        value = XPoly(Rational(binomial(k, n - k)) * params.a.pow(2 * k - n) * params.b.pow(n - k));
                    }
                    break;
                case ClosedForm::rational_bt_1_minus_at:
                    value = XPoly(Rational(binomial(n - 1, k - 1)) * params.a.pow(n - k) * params.b.pow(k));
                    break;
                case ClosedForm::log1p:
                    value = XPoly(Rational(factorial(uk)) / Rational(factorial(un)) * stirling.first_signed(n, k));
                    break;
                case ClosedForm::expm1:
                    value = XPoly(Rational(factorial(uk)) / Rational(factorial(un)) * stirling.second(n, k));
                    break;
                case ClosedForm::two_x_t_minus_t2:
                    if (2 * k >= n) {
                        const Rational coeff = Rational(binomial(k, n - k)) * Rational(2).pow(2 * k - n) *
                                               Rational((n - k) % 2 == 0 ? 1 : -1);
                        value = XPoly::monomial(coeff, static_cast<std::size_t>(2 * k - n));
                    }
                    break;
                case ClosedForm::lambert_w: {
                    const Rational sign((n - k) % 2 == 0 ? 1 : -1);
                    value = XPoly(Rational(k) * Rational(n).pow(n - k - 1) * sign /
                                  Rational(factorial(static_cast<unsigned>(n - k))));
                    break;
                }
            }
            c.at(un, uk) = value;
        }
    }
    return c;
}

Composita closed_composita(std::string_view name, const ClosedParams& params, std::size_t order) {
    return closed_composita(closed_form_from_name(name), params, order);
}

Series closed_series(ClosedForm form, const ClosedParams& params, std::size_t order) {
    const Series t = Series::t(order);
    const Series one = Series::constant(XPoly(1), order);
    switch (form) {
        case ClosedForm::linear_quadratic:
            return XPoly(params.a) * t + XPoly(params.b) * series_mul(t, t);
        case ClosedForm::rational_bt_1_minus_at:
            return series_mul(XPoly(params.b) * t, series_reciprocal(one - XPoly(params.a) * t));
        case ClosedForm::log1p:
            return series_log(one + t);
        case ClosedForm::expm1:
            return series_exp(t) - one;
        case ClosedForm::two_x_t_minus_t2:
            return XPoly::x() * XPoly(2) * t - series_mul(t, t);
        case ClosedForm::lambert_w:
            return closed_composita(ClosedForm::lambert_w, params, order).generating_series();
    }
    throw ArgumentError("unknown closed composita");
}

OrientationReport compose_orientation_report(std::size_t order) {
    const Series t = Series::t(order);
    const Series t2 = series_mul(t, t);
    const Series t3 = series_mul(t2, t);
    const Series outer = t + t2;
    const Series inner = t + XPoly(2) * t3;
    const Composita co = composita_from_powers(outer, order);
    const Composita ci = composita_from_powers(inner, order);
    const Composita direct = composita_from_powers(series_compose(outer, inner), order);

    auto combine = [order](const Composita& row_side, const Composita& col_side) {
        Composita out(order);
        for (std::size_t n = 1; n <= order; ++n) {
            for (std::size_t m = 1; m <= n; ++m) {
                XPoly acc;
                for (std::size_t k = m; k <= n; ++k) acc += row_side.at(n, k) * col_side.at(k, m);
                out.at(n, m) = acc;
            }
        }
        return out;
    };

    OrientationReport report;
    report.inner_rows_match = combine(ci, co) == direct;
    report.outer_rows_match = combine(co, ci) == direct;
    report.summary = std::string("A = outer(inner(t)): sum_k inner(n,k) outer(k,m) ") +
                     (report.inner_rows_match ? "matches" : "does not match") +
                     "; sum_k outer(n,k) inner(k,m) " + (report.outer_rows_match ? "matches" : "does not match") +
                     " (order " + std::to_string(order) + ")";
    return report;
}

}  // namespace composita
