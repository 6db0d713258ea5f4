#include "composita/series.hpp"

#include <string>
#include <utility>

#include "composita/errors.hpp"
#include "composita/kernels.hpp"

namespace composita {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order()) {
        throw ArgumentError(std::string(op) + ": series orders differ (" + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()) + ")");
    }
}

// The constant term as a nonzero rational, or a DomainError.
Rational unit_constant(const Series& f, const char* op) {
    const XPoly& c = f.constant_term();
    if (!c.is_constant() || c.is_zero()) {
        throw DomainError(std::string(op) + ": constant term must be a nonzero rational, got " + c.to_string());
    }
    return c.constant_term();
}

void require_constant_one(const Series& f, const char* op) {
    if (f.constant_term() != XPoly(1)) {
        throw DomainError(std::string(op) + ": constant term must be 1, got " + f.constant_term().to_string());
    }
}

void require_constant_zero(const Series& f, const char* op) {
    if (!f.constant_term().is_zero()) {
        throw DomainError(std::string(op) + ": constant term must be 0, got " + f.constant_term().to_string());
    }
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<XPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
        throw ArgumentError("series of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                            " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

Series Series::constant(const XPoly& c, std::size_t order) { return monomial(c, 0, order); }

Series Series::monomial(const XPoly& c, std::size_t power, std::size_t order) {
    Series s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

std::optional<std::size_t> Series::valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!coeffs_[n].is_zero()) return n;
    }
    return std::nullopt;
}

Series Series::truncate(std::size_t new_order) const {
    if (new_order > order()) {
        throw ArgumentError("cannot truncate a series of order " + std::to_string(order()) + " to order " +
                            std::to_string(new_order));
    }
    return Series(new_order, std::vector<XPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(new_order) + 1));
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series operator+(const Series& a, const Series& b) {
    require_same_order(a, b, "add");
    Series r = a;
    for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] += b.coeffs_[n];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    require_same_order(a, b, "sub");
    Series r = a;
    for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] -= b.coeffs_[n];
    return r;
}

Series operator*(const XPoly& s, const Series& f) {
    Series r = f;
    for (auto& c : r.coeffs_) c = s * c;
    return r;
}

Series series_mul(const Series& f, const Series& g) {
    require_same_order(f, g, "mul");
    return Series(f.order(), kernels::cauchy_product(f.coeffs(), g.coeffs()));
}

Series series_reciprocal(const Series& f) {
    const Rational inv = Rational(1) / unit_constant(f, "reciprocal");
    std::vector<XPoly> g(f.order() + 1);
    g[0] = XPoly(inv);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        XPoly acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!f[i].is_zero()) acc += f[i] * g[n - i];
        }
        g[n] = acc * (-inv);
    }
    return Series(f.order(), std::move(g));
}

Series series_exp(const Series& f) {
    require_constant_zero(f, "exp");
    // n g_n = sum_{k=1..n} k f_k g_{n-k}, from g' = f' g
    std::vector<XPoly> g(f.order() + 1);
    g[0] = XPoly(1);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        XPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) acc += (f[k] * g[n - k]) * Rational(static_cast<long>(k));
        }
        g[n] = acc * (Rational(1) / Rational(static_cast<long>(n)));
    }
    return Series(f.order(), std::move(g));
}

Series series_log(const Series& f) {
    require_constant_one(f, "log");
    // f g' = f'  =>  n g_n = n f_n - sum_{k=1..n-1} k g_k f_{n-k}
    std::vector<XPoly> g(f.order() + 1);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        XPoly acc;
        for (std::size_t k = 1; k < n; ++k) {
            if (!g[k].is_zero() && !f[n - k].is_zero()) acc += (g[k] * f[n - k]) * Rational(static_cast<long>(k));
        }
        g[n] = f[n] - acc * (Rational(1) / Rational(static_cast<long>(n)));
    }
    return Series(f.order(), std::move(g));
}

Series series_pow_rat(const Series& f, const Rational& alpha) {
    return series_pow_xpoly(f, XPoly(alpha));
}

Series series_pow_xpoly(const Series& f, const XPoly& exponent) {
    require_constant_one(f, "pow");
    return series_exp(exponent * series_log(f));
}

Series series_pow_int(const Series& f, long exponent) {
    if (exponent < 0) return series_pow_int(series_reciprocal(f), -exponent);
    Series result = Series::constant(XPoly(1), f.order());
    Series base = f;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1U) != 0) result = series_mul(result, base);
        e >>= 1U;
        if (e != 0) base = series_mul(base, base);
    }
    return result;
}

Series series_compose(const Series& f, const Series& g) {
    require_same_order(f, g, "compose");
    require_constant_zero(g, "compose (inner series)");
    const std::size_t order = f.order();
    Series acc = Series::constant(f[order], order);
    for (std::size_t k = order; k-- > 0;) {
        acc = series_mul(acc, g) + Series::constant(f[k], order);
    }
    return acc;
}

Series series_div_t_pow(const Series& f, std::size_t m) {
    if (m == 0) throw ArgumentError("div_t_pow: m must be positive");
    if (m > f.order()) {
        throw DomainError("div_t_pow: cannot divide a series of order " + std::to_string(f.order()) + " by t^" +
                          std::to_string(m));
    }
    for (std::size_t n = 0; n < m; ++n) {
        if (!f[n].is_zero()) {
            throw DomainError("div_t_pow: coefficient of t^" + std::to_string(n) + " is " + f[n].to_string() +
                              ", not divisible by t^" + std::to_string(m));
        }
    }
    return Series(f.order() - m, std::vector<XPoly>(f.coeffs().begin() + static_cast<long>(m), f.coeffs().end()));
}

}  // namespace composita
