#include "composita/families.hpp"

#include <array>
#include <utility>

#include "composita/composita.hpp"
#include "composita/errors.hpp"

namespace composita {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    bool egf;
    int variants;
    std::span<const std::string_view> params;
};

constexpr std::array<std::string_view, 0> kNoParams{};
constexpr std::array<std::string_view, 1> kA{"a"};
constexpr std::array<std::string_view, 1> kAlpha{"alpha"};
constexpr std::array<std::string_view, 1> kLambda{"lambda"};
constexpr std::array<std::string_view, 2> kLambdaMu{"lambda", "mu"};

constexpr std::array<FamilyInfo, 16> kFamilyInfo{{
    {Family::chebyshev_t, "chebyshev_t", false, 1, kNoParams},
    {Family::chebyshev_u, "chebyshev_u", false, 1, kNoParams},
    {Family::legendre, "legendre", false, 1, kNoParams},
    {Family::gegenbauer, "gegenbauer", false, 2, kAlpha},
    {Family::hermite, "hermite", true, 1, kNoParams},
    {Family::laguerre, "laguerre", false, 1, kAlpha},
    {Family::stirling_poly, "stirling_poly", true, 2, kNoParams},
    {Family::abel, "abel", true, 1, kA},
    {Family::bernoulli2, "bernoulli2", true, 2, kNoParams},
    {Family::gen_bernoulli, "gen_bernoulli", true, 2, kAlpha},
    {Family::euler, "euler", true, 1, kNoParams},
    {Family::peters, "peters", true, 2, kLambdaMu},
    {Family::narumi, "narumi", true, 2, kAlpha},
    {Family::humbert, "humbert", false, 2, kLambda},
    {Family::lerch, "lerch", false, 1, kLambda},
    {Family::mahler, "mahler", true, 1, kNoParams},
}};

const FamilyInfo& info(Family family) { return kFamilyInfo.at(static_cast<std::size_t>(family)); }

const std::array<Correction, 5> kLedger{{
    {Family::bernoulli2, 2, "[n-j,k] -> [n-i,k]",
     "the last inner Stirling bracket uses j outside the scope of its sum; the (1+t)^x factor contributes "
     "s(n-i,k)"},
    {Family::bernoulli2, 2, "b_n = sum_i ... -> b_n = n! sum_i ...",
     "the printed sum is b_n(x)/n!; the exponential generating function needs the n! scaling"},
    {Family::peters, 1, "sum_{i=1..j} -> sum_{i=0..j}",
     "the exponential's constant term (i = 0, contributing 1 at j = 0) is dropped; T_n itself already carries 1/n! "
     "consistently with the n!/(j!(n-j)!) product"},
    {Family::narumi, 1, "[i+j,i] -> [i+j,j]",
     "the coefficient of (ln(1+t)/t)^j is s(i+j,j) j!/(i+j)!, as in the preceding derivation step"},
    {Family::lerch, 1, "C(lambda+k-1,k) -> C(k-lambda-1,k)",
     "the closed form expands (1 - x ln(1+t))^(-lambda); the printed generating function has exponent +lambda, "
     "taken here as the definition"},
}};

Series one_plus_t(std::size_t order) { return Series::constant(XPoly(1), order) + Series::t(order); }

// ln(1+t)/t to the given order.
Series log1p_over_t(std::size_t order) { return series_div_t_pow(series_log(one_plus_t(order + 1)), 1); }

// (e^t - 1)/t to the given order.
Series expm1_over_t(std::size_t order) {
    const std::size_t o = order + 1;
    return series_div_t_pow(series_exp(Series::t(o)) - Series::constant(XPoly(1), o), 1);
}

std::string literal(const Rational& r) {
    if (r.is_integer() && r.sign() >= 0) return r.to_string();
    return "(" + r.to_string() + ")";
}

// Exponent in parenthesised affine form, e.g. "(-3/2)".
std::string exponent(const Rational& r) { return "(" + r.to_string() + ")"; }

XPoly x_poly() { return XPoly::x(); }

}  // namespace

std::string_view family_name(Family family) { return info(family).name; }

Family family_from_name(std::string_view name) {
    for (const auto& entry : kFamilyInfo) {
        if (entry.name == name) return entry.family;
    }
    throw ArgumentError("unknown family '" + std::string(name) + "'");
}

bool family_is_egf(Family family) { return info(family).egf; }
std::span<const std::string_view> family_params(Family family) { return info(family).params; }
int family_variant_count(Family family) { return info(family).variants; }

const Rational& FamilySpec::param(std::string_view name) const {
    const auto it = params.find(std::string(name));
    if (it == params.end()) {
        throw ArgumentError(std::string(family_name(family)) + " needs parameter '" + std::string(name) + "'");
    }
    return it->second;
}

FamilySpec make_family_spec(Family family, std::map<std::string, Rational> params) {
    const auto required = family_params(family);
    for (const auto& [key, value] : params) {
        bool known = false;
        for (auto r : required) known = known || r == key;
        if (!known) {
            throw ArgumentError(std::string(family_name(family)) + " takes no parameter '" + key + "'");
        }
    }
    for (auto r : required) {
        if (params.find(std::string(r)) == params.end()) {
            throw ArgumentError(std::string(family_name(family)) + " needs parameter '" + std::string(r) + "'");
        }
    }
    FamilySpec spec{family, std::move(params), family_is_egf(family)};
    if (family == Family::abel && spec.param("a").is_zero()) throw ArgumentError("abel needs a != 0");
    if (family == Family::peters && !spec.param("mu").is_integer()) {
        throw ArgumentError("peters needs an integer mu (the constant term 2^(-mu) must be rational)");
    }
    return spec;
}

FamilySpec default_family_spec(Family family) {
    switch (family) {
        case Family::abel: return make_family_spec(family, {{"a", Rational(1)}});
        case Family::gegenbauer: return make_family_spec(family, {{"alpha", Rational::parse("3/2")}});
        case Family::laguerre: return make_family_spec(family, {{"alpha", Rational::parse("1/2")}});
        case Family::gen_bernoulli: return make_family_spec(family, {{"alpha", Rational::parse("3/2")}});
        case Family::peters: return make_family_spec(family, {{"lambda", Rational(2)}, {"mu", Rational(-2)}});
        case Family::narumi: return make_family_spec(family, {{"alpha", Rational::parse("3/2")}});
        case Family::humbert: return make_family_spec(family, {{"lambda", Rational::parse("3/2")}});
        case Family::lerch: return make_family_spec(family, {{"lambda", Rational(2)}});
        default: return make_family_spec(family);
    }
}

Series family_series(const FamilySpec& spec, std::size_t order) {
    const Series t = Series::t(order);
    const Series t2 = series_mul(t, t);
    const Series one = Series::constant(XPoly(1), order);
    const XPoly x = x_poly();
    // 1 - 2xt + t^2
    const Series chebyshev_base = one - (XPoly(2) * x) * t + t2;
    const Series pow_x_1pt = series_pow_xpoly(one_plus_t(order), x);

    switch (spec.family) {
        case Family::chebyshev_t:
            return series_mul(one - x * t, series_reciprocal(chebyshev_base));
        case Family::chebyshev_u:
            return series_reciprocal(chebyshev_base);
        case Family::legendre:
            return series_pow_rat(chebyshev_base, Rational::parse("-1/2"));
        case Family::gegenbauer:
            return series_pow_rat(chebyshev_base, -spec.param("alpha"));
        case Family::hermite:
            return series_exp((XPoly(2) * x) * t - t2);
        case Family::laguerre: {
            const Rational alpha = spec.param("alpha");
            const Series weight = series_pow_rat(one - t, -alpha - Rational(1));
            const Series inner = x * series_mul(t, series_reciprocal(t - one));
            return series_mul(weight, series_exp(inner));
        }
        case Family::stirling_poly: {
            const std::size_t o = order + 1;
            const Series e = series_exp(-Series::t(o));
            const Series ratio = series_div_t_pow(Series::constant(XPoly(1), o) - e, 1);  // (1 - e^-t)/t
            return series_pow_xpoly(series_reciprocal(ratio), x + XPoly(1));
        }
        case Family::abel: {
            const Rational a = spec.param("a");
            const Series w = closed_series(ClosedForm::lambert_w, {}, order);
            std::vector<XPoly> scaled(order + 1);
            for (std::size_t n = 0; n <= order; ++n) scaled[n] = w[n] * a.pow(static_cast<long>(n));
            return series_exp((x * (Rational(1) / a)) * Series(order, std::move(scaled)));
        }
        case Family::bernoulli2:
            return series_mul(series_reciprocal(log1p_over_t(order)), pow_x_1pt);
        case Family::gen_bernoulli:
            return series_mul(series_exp(x * t), series_pow_rat(expm1_over_t(order), -spec.param("alpha")));
        case Family::euler:
            return series_mul(XPoly(2) * series_exp(x * t), series_reciprocal(one + series_exp(t)));
        case Family::peters: {
            const Rational lambda = spec.param("lambda");
            const long mu = spec.param("mu").numerator().get_si();
            const Series base = one + series_pow_rat(one_plus_t(order), lambda);
            return series_mul(series_pow_int(base, -mu), pow_x_1pt);
        }
        case Family::narumi:
            return series_mul(series_pow_rat(log1p_over_t(order), -spec.param("alpha")), pow_x_1pt);
        case Family::humbert:
            return series_pow_rat(one - (XPoly(3) * x) * t + series_mul(t2, t), -spec.param("lambda"));
        case Family::lerch:
            return series_pow_rat(one - x * series_log(one_plus_t(order)), spec.param("lambda"));
        case Family::mahler: {
            const Series expm1 = series_exp(t) - one;
            return series_exp(x * (t - expm1));
        }
    }
    throw ArgumentError("unknown family");
}

std::string family_gf_expression(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::chebyshev_t: return "(1 - t*x)/(1 - 2*t*x + t^2)";
        case Family::chebyshev_u: return "1/(1 - 2*t*x + t^2)";
        case Family::legendre: return "(1 - 2*x*t + t^2)^(-1/2)";
        case Family::gegenbauer: return "(1 - 2*x*t + t^2)^" + exponent(-spec.param("alpha"));
        case Family::hermite: return "exp(2*x*t - t^2)";
        case Family::laguerre:
            return "(1 - t)^" + exponent(-spec.param("alpha") - Rational(1)) + "*exp(x*t/(t - 1))";
        case Family::stirling_poly: return "(t/(1 - exp(-t)))^(x + 1)";
        case Family::abel: {
            const Rational a = spec.param("a");
            return "exp(" + literal(Rational(1) / a) + "*x*lambertw(" + literal(a) + "*t))";
        }
        case Family::bernoulli2: return "t*(t + 1)^(x)/log(t + 1)";
        case Family::gen_bernoulli: return "exp(x*t)*(t/(exp(t) - 1))^" + exponent(spec.param("alpha"));
        case Family::euler: return "2*exp(x*t)/(1 + exp(t))";
        case Family::peters:
            return "(1 + (1 + t)^" + exponent(spec.param("lambda")) + ")^" + exponent(-spec.param("mu")) +
                   "*(1 + t)^(x)";
        case Family::narumi: return "(t/log(1 + t))^" + exponent(spec.param("alpha")) + "*(1 + t)^(x)";
        case Family::humbert: return "(1 - 3*x*t + t^3)^" + exponent(-spec.param("lambda"));
        case Family::lerch: return "(1 - x*log(1 + t))^" + exponent(spec.param("lambda"));
        case Family::mahler: return "exp(x*(1 + t - exp(t)))";
    }
    throw ArgumentError("unknown family");
}

std::vector<XPoly> family_oracle_table(const FamilySpec& spec, std::size_t max_n) {
    const Series s = family_series(spec, max_n);
    std::vector<XPoly> out(s.coeffs());
    if (spec.egf) {
        for (std::size_t n = 0; n <= max_n; ++n) out[n] = out[n] * Rational(factorial(static_cast<unsigned>(n)));
    }
    return out;
}

XPoly family_oracle(const FamilySpec& spec, std::size_t n) { return family_oracle_table(spec, n)[n]; }

std::vector<Rational> bernoulli_numbers(std::size_t max_n) {
    std::vector<Rational> b(max_n + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational acc(0);
        for (std::size_t j = 0; j < n; ++j) acc += Rational(binomial(static_cast<long>(n + 1), static_cast<long>(j))) * b[j];
        b[n] = -acc / Rational(static_cast<long>(n + 1));
    }
    return b;
}

std::optional<std::vector<XPoly>> family_reference_table(const FamilySpec& spec, std::size_t max_n) {
    const XPoly x = x_poly();
    std::vector<XPoly> p;
    p.reserve(max_n + 2);
    auto three_term = [&](XPoly p0, XPoly p1, auto next) {
        p.push_back(std::move(p0));
        p.push_back(std::move(p1));
        // next(n) returns P_{n+1} from P_n and P_{n-1}
        while (p.size() <= max_n) p.push_back(next(static_cast<long>(p.size()) - 1));
        p.resize(max_n + 1);
        return p;
    };
    switch (spec.family) {
        case Family::chebyshev_t:
            return three_term(XPoly(1), x, [&](long n) { return XPoly(2) * x * p[n] - p[n - 1]; });
        case Family::chebyshev_u:
            return three_term(XPoly(1), XPoly(2) * x, [&](long n) { return XPoly(2) * x * p[n] - p[n - 1]; });
        case Family::legendre:
            // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
            return three_term(XPoly(1), x, [&](long n) {
                return (x * p[n] * Rational(2 * n + 1) - p[n - 1] * Rational(n)) * (Rational(1) / Rational(n + 1));
            });
        case Family::hermite:
            return three_term(XPoly(1), XPoly(2) * x,
                              [&](long n) { return XPoly(2) * x * p[n] - p[n - 1] * Rational(2 * n); });
        case Family::gegenbauer: {
            // (n+1) C_{n+1} = 2x (n+alpha) C_n - (n+2alpha-1) C_{n-1}
            const Rational alpha = spec.param("alpha");
            return three_term(XPoly(1), x * (Rational(2) * alpha), [&](long n) {
                return (x * p[n] * (Rational(2) * (Rational(n) + alpha)) -
                        p[n - 1] * (Rational(n) + Rational(2) * alpha - Rational(1))) *
                       (Rational(1) / Rational(n + 1));
            });
        }
        case Family::laguerre: {
            // (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}
            const Rational alpha = spec.param("alpha");
            return three_term(XPoly(1), XPoly(std::vector<Rational>{Rational(1) + alpha, Rational(-1)}), [&](long n) {
                const XPoly factor(std::vector<Rational>{Rational(2 * n + 1) + alpha, Rational(-1)});
                return (factor * p[n] - p[n - 1] * (Rational(n) + alpha)) * (Rational(1) / Rational(n + 1));
            });
        }
        case Family::abel: {
            const Rational a = spec.param("a");
            for (std::size_t n = 0; n <= max_n; ++n) {
                if (n == 0) {
                    p.emplace_back(1);
                    continue;
                }
                const XPoly shifted(std::vector<Rational>{-Rational(static_cast<long>(n)) * a, Rational(1)});
                p.push_back(x * shifted.pow(static_cast<unsigned>(n - 1)));
            }
            return p;
        }
        case Family::gen_bernoulli: {
            if (spec.param("alpha") != Rational(1)) return std::nullopt;
            // B_n(x) = sum_k C(n,k) B_k x^(n-k)
            const auto b = bernoulli_numbers(max_n);
            for (std::size_t n = 0; n <= max_n; ++n) {
                XPoly acc;
                for (std::size_t k = 0; k <= n; ++k) {
                    acc += XPoly::monomial(Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * b[k], n - k);
                }
                p.push_back(acc);
            }
            return p;
        }
        default:
            return std::nullopt;
    }
}

std::optional<XPoly> family_reference(const FamilySpec& spec, std::size_t n) {
    auto table = family_reference_table(spec, n);
    if (!table) return std::nullopt;
    return (*table)[n];
}

std::span<const Correction> correction_ledger() { return kLedger; }

std::vector<Correction> corrections_for(Family family, int variant) {
    std::vector<Correction> out;
    for (const auto& c : kLedger) {
        if (c.family == family && c.variant == variant) out.push_back(c);
    }
    return out;
}

}  // namespace composita
