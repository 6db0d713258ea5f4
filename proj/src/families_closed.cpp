#include <algorithm>
#include <string>

#include "composita/errors.hpp"
#include "composita/families.hpp"
#include "composita/stirling.hpp"

// Explicit coefficient formulas. Stirling brackets of the first kind inside
// these formulas are signed: s(n,k) = (-1)^(n-k) [n,k].

namespace composita {

namespace {

Rational sgn(long e) { return Rational((e % 2 == 0) ? 1 : -1); }
Rational C(long n, long k) { return Rational(binomial(n, k)); }
Rational fact(long n) { return Rational(factorial(static_cast<unsigned>(n))); }
Rational inv_fact(long n) { return Rational(1) / fact(n); }
XPoly xpow(const Rational& c, long power) { return XPoly::monomial(c, static_cast<std::size_t>(power)); }
long ceil_half(long n) { return (n + 1) / 2; }

// sum_{k=0..m} s(m,k) x^k = x(x-1)...(x-m+1)
XPoly falling_from_stirling(const StirlingPair& st, long m) {
    XPoly acc;
    for (long k = 0; k <= m; ++k) acc += xpow(st.first_signed(m, k), k);
    return acc;
}

class ClosedForms {
public:
    ClosedForms(const FamilySpec& spec, long n, FormulaMode mode)
        : spec_(spec), n_(n), corrected_(mode == FormulaMode::corrected), st_(static_cast<std::size_t>(2 * n + 2)) {}

    XPoly evaluate(int variant) const {
        switch (spec_.family) {
            case Family::chebyshev_t: return chebyshev_t();
            case Family::chebyshev_u: return chebyshev_u();
            case Family::legendre: return legendre();
            case Family::gegenbauer: return variant == 1 ? gegenbauer_1() : gegenbauer_2();
            case Family::hermite: return hermite();
            case Family::laguerre: return laguerre();
            case Family::stirling_poly: return variant == 1 ? stirling_poly_1() : stirling_poly_2();
            case Family::abel: return abel();
            case Family::bernoulli2: return variant == 1 ? bernoulli2_1() : bernoulli2_2();
            case Family::gen_bernoulli: return gen_bernoulli(variant);
            case Family::euler: return euler();
            case Family::peters: return variant == 1 ? peters_1() : peters_2();
            case Family::narumi: return variant == 1 ? narumi_1() : narumi_2();
            case Family::humbert: return variant == 1 ? humbert_1() : humbert_2();
            case Family::lerch: return lerch();
            case Family::mahler: return mahler();
        }
        throw ArgumentError("unknown family");
    }

private:
    // Composita of 2xt - t^2.
    XPoly two_x_t_minus_t2(long k) const {
        if (2 * k < n_) return {};
        return xpow(C(k, n_ - k) * Rational(2).pow(2 * k - n_) * sgn(n_ - k), 2 * k - n_);
    }

    XPoly chebyshev_t() const {
        if (n_ == 0) return XPoly(1);  // P_0 = r(0); the sum divides by k = 0
        XPoly acc;
        for (long k = ceil_half(n_); k <= n_; ++k) {
            acc += xpow(C(k, n_ - k) * Rational(2).pow(2 * k - n_ - 1) / Rational(k) * sgn(n_ - k), 2 * k - n_);
        }
        return acc * Rational(n_);
    }

    XPoly chebyshev_u() const {
        XPoly acc;
        for (long k = ceil_half(n_); k <= n_; ++k) acc += two_x_t_minus_t2(k);
        return acc;
    }

    XPoly legendre() const {
        XPoly acc;
        for (long k = ceil_half(n_); k <= n_; ++k) {
            acc += xpow(C(k, n_ - k) * C(2 * k, k) * sgn(n_ - k), 2 * k - n_);
        }
        return acc * Rational(2).pow(-n_);
    }

    XPoly gegenbauer_1() const {
        const Rational alpha = spec_.param("alpha");
        XPoly acc;
        for (long m = 0; m <= n_; ++m) {
            XPoly inner;
            for (long k = std::max(m, ceil_half(n_)); k <= n_; ++k) {
                inner += xpow(Rational(2).pow(2 * k - n_) * inv_fact(k) * st_.first_signed(k, m) * C(k, n_ - k),
                              2 * k - n_);
            }
            acc += inner * (alpha.pow(m) * sgn(n_ - m));
        }
        return acc;
    }

    XPoly gegenbauer_2() const {
        const Rational alpha = spec_.param("alpha");
        XPoly acc;
        for (long k = ceil_half(n_); k <= n_; ++k) {
            acc += xpow(C(k, n_ - k) * binom_generalized(Rational(k) + alpha - Rational(1), static_cast<unsigned>(k)) *
                            sgn(n_ - k) * Rational(2).pow(2 * k - n_),
                        2 * k - n_);
        }
        return acc;
    }

    XPoly hermite() const {
        XPoly acc;
        for (long k = ceil_half(n_); k <= n_; ++k) {
            acc += xpow(Rational(2).pow(2 * k - n_) * sgn(n_ - k) * inv_fact(n_ - k) * inv_fact(2 * k - n_), 2 * k - n_);
        }
        return acc * fact(n_);
    }

    XPoly laguerre() const {
        const Rational alpha = spec_.param("alpha");
        XPoly acc;
        for (long i = 0; i <= n_; ++i) acc += laguerre_exponential_part(n_ - i) * laguerre_weight_binomial(i, alpha);
        return acc;
    }

    // Coefficients of e^{xt/(t-1)}.
    static XPoly laguerre_exponential_part(long m) {
        if (m == 0) return XPoly(1);
        XPoly acc;
        for (long k = 1; k <= m; ++k) acc += xpow(sgn(k) * inv_fact(k) * C(m - 1, k - 1), k);
        return acc;
    }

    // Composita of (e^t - 1)/t - 1 at (n, k).
    Rational expm1_over_t_minus_one(long n, long k) const {
        Rational acc(0);
        for (long j = 0; j <= k; ++j) {
            acc += fact(j) * sgn(k + j) * C(k, j) * st_.second(n + j, j) * inv_fact(n + j);
        }
        return acc;
    }

    XPoly stirling_poly_1() const {
        XPoly acc;
        const XPoly x_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
        for (long m = 0; m <= n_; ++m) {
            Rational outer(0);
            for (long k = m; k <= n_; ++k) {
                outer += fact(n_) * inv_fact(k) * st_.first_signed(k, m) * expm1_over_t_minus_one(n_, k);
            }
            acc += x_plus_1.pow(static_cast<unsigned>(m)) * (sgn(n_ + m) * outer);
        }
        return acc;
    }

    XPoly stirling_poly_2() const {
        XPoly acc;
        for (long k = 0; k <= n_; ++k) {
            Rational inner(0);
            for (long j = 0; j <= k; ++j) {
                inner += fact(j) * sgn(n_ + j) * inv_fact(n_ + j) * C(k, j) * st_.second(n_ + j, j);
            }
            acc += binom_x(Rational(k), static_cast<unsigned>(k)) * inner;
        }
        return acc * fact(n_);
    }

    XPoly abel() const {
        if (n_ == 0) return XPoly(1);  // a(0) = r(0)
        const Rational a = spec_.param("a");
        XPoly acc;
        for (long k = 1; k <= n_; ++k) {
            acc += xpow(a.pow(n_ - k) * Rational(k) * Rational(n_).pow(n_ - k - 1) * sgn(n_ - k) * C(n_, k), k);
        }
        return acc;
    }

    XPoly bernoulli2_1() const {
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            Rational weight(0);
            for (long k = 0; k <= n_ - i; ++k) weight += st_.first_signed(n_ - i, k) / Rational(k + 1);
            acc += falling_from_stirling(st_, i) * (C(n_, i) * weight);
        }
        return acc;
    }

    // Coefficient of t^i in t/ln(1+t) through 1/(1 + (ln(1+t)/t - 1)).
    Rational t_over_log1p(long i, long k) const {
        Rational acc(0);
        for (long j = 0; j <= k; ++j) acc += sgn(j) * fact(j) * st_.first_signed(j + i, j) * C(k, j) * inv_fact(j + i);
        return acc;
    }

    XPoly bernoulli2_2() const {
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            if (corrected_) {
                Rational weight(0);
                for (long k = 0; k <= i; ++k) weight += t_over_log1p(i, k);
                acc += falling_from_stirling(st_, n_ - i) * (weight * inv_fact(n_ - i));
                continue;
            }
            // As printed: the trailing sum over [n-j,k] is read inside the scope of j.
            for (long k = 0; k <= i; ++k) {
                for (long j = 0; j <= k; ++j) {
                    const Rational w = sgn(j) * fact(j) * st_.first_signed(j + i, j) * C(k, j) * inv_fact(j + i);
                    XPoly tail;
                    for (long kk = 0; kk <= n_ - i; ++kk) tail += xpow(st_.first_signed(n_ - j, kk), kk);
                    acc += tail * (w * inv_fact(n_ - i));
                }
            }
        }
        return corrected_ ? acc * fact(n_) : acc;
    }

    // Coefficient of t^n in (t/(e^t-1))^alpha.
    Rational gen_bernoulli_weight(int variant, long n, const Rational& alpha) const {
        Rational acc(0);
        if (variant == 1) {
            for (long m = 0; m <= n; ++m) {
                Rational inner(0);
                for (long k = m; k <= n; ++k) inner += inv_fact(k) * st_.first_signed(k, m) * expm1_over_t_minus_one(n, k);
                acc += alpha.pow(m) * sgn(m) * inner;
            }
        } else {
            for (long k = 0; k <= n; ++k) {
                acc += sgn(k) * binom_generalized(Rational(k) + alpha - Rational(1), static_cast<unsigned>(k)) *
                       expm1_over_t_minus_one(n, k);
            }
        }
        return acc;
    }

    XPoly gen_bernoulli(int variant) const {
        const Rational alpha = spec_.param("alpha");
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            acc += xpow(gen_bernoulli_weight(variant, i, alpha) * inv_fact(n_ - i), n_ - i);
        }
        return acc * fact(n_);
    }

    XPoly euler() const {
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            Rational inner(0);
            for (long k = 0; k <= n_ - i; ++k) inner += sgn(k) * fact(k) / Rational(2).pow(k) * st_.second(n_ - i, k);
            acc += xpow(C(n_, i) * inner, i);
        }
        return acc;
    }

    Rational two_pow_minus_mu() const { return Rational(2).pow(-spec_.param("mu").numerator().get_si()); }

    XPoly peters_1() const {
        const Rational lambda = spec_.param("lambda");
        const Rational mu = spec_.param("mu");
        const long i_start = corrected_ ? 0 : 1;
        XPoly acc;
        for (long j = 0; j <= n_; ++j) {
            Rational weight(0);
            for (long i = i_start; i <= j; ++i) {
                Rational over_m(0);
                for (long m = i; m <= n_; ++m) {
                    Rational over_k(0);
                    for (long k = m; k <= j; ++k) over_k += st_.second(k, m) * st_.first_signed(j, k) * lambda.pow(k);
                    over_m += Rational(2).pow(-m) * over_k * st_.first_signed(m, i);
                }
                weight += (-mu).pow(i) * over_m;
            }
            acc += falling_from_stirling(st_, n_ - j) * (C(n_, j) * weight);
        }
        return acc * two_pow_minus_mu();
    }

    XPoly peters_2() const {
        const Rational lambda = spec_.param("lambda");
        const Rational mu = spec_.param("mu");
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            Rational weight(0);
            for (long k = 0; k <= i; ++k) {
                Rational inner(0);
                for (long j = 0; j <= k; ++j) {
                    inner += sgn(j) * C(k, j) * binom_generalized(Rational(j) * lambda, static_cast<unsigned>(i));
                }
                weight += Rational(2).pow(-k) * binom_generalized(mu + Rational(k) - Rational(1), static_cast<unsigned>(k)) *
                          inner;
            }
            acc += binom_x(Rational(0), static_cast<unsigned>(n_ - i)) * (weight * two_pow_minus_mu());
        }
        return acc * fact(n_);
    }

    XPoly narumi_1() const {
        const Rational alpha = spec_.param("alpha");
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            Rational weight(0);
            for (long m = 0; m <= i; ++m) {
                Rational over_k(0);
                for (long k = m; k <= i; ++k) {
                    Rational over_j(0);
                    for (long j = 0; j <= k; ++j) {
                        const Rational bracket = st_.first_signed(i + j, corrected_ ? j : i);
                        over_j += bracket * sgn(j - k) * inv_fact(j + i) * inv_fact(k - j);
                    }
                    over_k += st_.first_signed(k, m) * over_j;
                }
                weight += (-alpha).pow(m) * over_k;
            }
            acc += falling_from_stirling(st_, n_ - i) * (fact(i) * weight * C(n_, i));
        }
        return acc;
    }

    XPoly narumi_2() const {
        const Rational alpha = spec_.param("alpha");
        XPoly acc;
        for (long i = 0; i <= n_; ++i) {
            Rational weight(0);
            for (long k = 0; k <= i; ++k) {
                weight += binom_generalized(Rational(k) + alpha - Rational(1), static_cast<unsigned>(k)) *
                          t_over_log1p(i, k);
            }
            acc += binom_x(Rational(0), static_cast<unsigned>(n_ - i)) * weight;
        }
        return acc * fact(n_);
    }

    XPoly humbert_1() const {
        const Rational lambda = spec_.param("lambda");
        XPoly acc;
        for (long m = 0; m <= n_; ++m) {
            XPoly inner;
            for (long j = 0; 2 * j <= n_ - m; ++j) {
                if (n_ - 3 * j < 0) continue;  // C(n-2j, j) = 0
                inner += xpow(Rational(3).pow(n_ - 3 * j) * inv_fact(n_ - 2 * j) * C(n_ - 2 * j, j) *
                                  st_.first_signed(n_ - 2 * j, m) * sgn(n_ - 3 * j),
                              n_ - 3 * j);
            }
            acc += inner * (sgn(m) * lambda.pow(m));
        }
        return acc;
    }

    XPoly humbert_2() const {
        const Rational lambda = spec_.param("lambda");
        XPoly acc;
        for (long m = 0; 3 * m <= n_; ++m) {
            acc += xpow(C(n_ - 2 * m, m) * Rational(3).pow(n_ - 3 * m) * sgn(m) *
                            binom_generalized(Rational(n_ - 2 * m) + lambda - Rational(1), static_cast<unsigned>(n_ - 2 * m)),
                        n_ - 3 * m);
        }
        return acc;
    }

    XPoly lerch() const {
        if (n_ == 0) return XPoly(1);  // a(0) = r(0)
        const Rational lambda = spec_.param("lambda");
        // printed: C(lambda+k-1, k), the coefficients of (1-u)^(-lambda)
        const Rational upper_shift = corrected_ ? -lambda - Rational(1) : lambda - Rational(1);
        XPoly acc;
        for (long k = 1; k <= n_; ++k) {
            acc += xpow(fact(k) * st_.first_signed(n_, k) *
                            binom_generalized(Rational(k) + upper_shift, static_cast<unsigned>(k)),
                        k);
        }
        return acc * inv_fact(n_);
    }

    XPoly mahler() const {
        XPoly acc;
        for (long k = 0; k <= n_; ++k) {
            Rational inner(0);
            for (long j = 0; j <= k; ++j) inner += sgn(j) * C(n_, k - j) * st_.second(n_ - k + j, j);
            acc += xpow(inner, k);
        }
        return acc;
    }

    const FamilySpec& spec_;
    long n_;
    bool corrected_;
    StirlingPair st_;
};

}  // namespace

XPoly family_closed(const FamilySpec& spec, int variant, std::size_t n, FormulaMode mode) {
    if (variant < 1 || variant > family_variant_count(spec.family)) {
        throw ArgumentError(std::string(family_name(spec.family)) + " has no closed formula variant " +
                            std::to_string(variant));
    }
    return ClosedForms(spec, static_cast<long>(n), mode).evaluate(variant);
}

std::vector<XPoly> family_closed_table(const FamilySpec& spec, int variant, std::size_t max_n, FormulaMode mode) {
    std::vector<XPoly> out(max_n + 1);
    const auto count = static_cast<long>(max_n + 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = 0; n < count; ++n) {
        out[static_cast<std::size_t>(n)] = family_closed(spec, variant, static_cast<std::size_t>(n), mode);
    }
    return out;
}

Rational laguerre_weight_binomial(std::size_t n, const Rational& alpha) {
    return binom_generalized(Rational(static_cast<long>(n)) + alpha, static_cast<unsigned>(n));
}

Rational laguerre_weight_stirling(std::size_t n, const Rational& alpha) {
    const StirlingPair st(n);
    const auto nn = static_cast<long>(n);
    Rational acc(0);
    for (long k = 0; k <= nn; ++k) acc += (alpha + Rational(1)).pow(k) * sgn(nn - k) * st.first_signed(nn, k);
    return acc * inv_fact(nn);
}

XPoly humbert_parity_form(const Rational& lambda, std::size_t n) {
    if (n == 0) return XPoly(1);  // a(0) = r(0)
    const auto nn = static_cast<long>(n);
    XPoly acc;
    for (long k = 1; k <= nn; ++k) {
        if ((nn - k) % 2 != 0) continue;  // ((-1)^(n-k) + 1)/2 = 0
        const long half = (nn - k) / 2;
        const long power = (3 * k - nn) / 2;
        if (power < 0) continue;  // C(k, (n-k)/2) = 0
        acc += xpow(C(k, half) * Rational(3).pow(power) * sgn(power) *
                        binom_generalized(Rational(k) + lambda - Rational(1), static_cast<unsigned>(k)),
                    power);
    }
    return acc * sgn(nn);
}

}  // namespace composita
