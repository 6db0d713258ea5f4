#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "composita/rational.hpp"
#include "composita/series.hpp"
#include "composita/xpoly.hpp"

namespace composita {

enum class Family {
    chebyshev_t,
    chebyshev_u,
    legendre,
    gegenbauer,
    hermite,
    laguerre,
    stirling_poly,
    abel,
    bernoulli2,
    gen_bernoulli,
    euler,
    peters,
    narumi,
    humbert,
    lerch,
    mahler,
};

inline constexpr Family kAllFamilies[] = {
    Family::chebyshev_t, Family::chebyshev_u, Family::legendre,      Family::gegenbauer,
    Family::hermite,     Family::laguerre,    Family::stirling_poly, Family::abel,
    Family::bernoulli2,  Family::gen_bernoulli, Family::euler,       Family::peters,
    Family::narumi,      Family::humbert,     Family::lerch,         Family::mahler,
};

std::string_view family_name(Family family);
/// Throws ArgumentError for unknown names.
Family family_from_name(std::string_view name);

/// True when the generating function carries t^n / n!.
bool family_is_egf(Family family);
/// Parameter names the family needs, e.g. {"lambda", "mu"} for Peters.
std::span<const std::string_view> family_params(Family family);
/// 1 or 2: how many closed formulas exist.
int family_variant_count(Family family);

struct FamilySpec {
    Family family = Family::chebyshev_t;
    std::map<std::string, Rational> params;
    bool egf = false;

    const Rational& param(std::string_view name) const;
};

/// Validates the bindings and sets egf. Throws ArgumentError on a missing or
/// unknown parameter, a = 0 for Abel, or a non-integer mu for Peters (its
/// generating function has constant term 2^(-mu)).
FamilySpec make_family_spec(Family family, std::map<std::string, Rational> params = {});

/// Parameter values used by `verify` when none are given.
FamilySpec default_family_spec(Family family);

/// The generating function with ordinary coefficients (no n! scaling),
/// built from series primitives.
Series family_series(const FamilySpec& spec, std::size_t order);

/// The generating function as an expression in the gfexpr grammar, with the
/// parameters substituted.
std::string family_gf_expression(const FamilySpec& spec);

/// P_n from the generating function, times n! for exponential families.
XPoly family_oracle(const FamilySpec& spec, std::size_t n);
std::vector<XPoly> family_oracle_table(const FamilySpec& spec, std::size_t max_n);

enum class FormulaMode { printed, corrected };

/// Explicit coefficient formula. Printed mode transcribes the printed formula;
/// corrected mode applies the fixes in correction_ledger(). Throws
/// ArgumentError for a variant the family does not have.
XPoly family_closed(const FamilySpec& spec, int variant, std::size_t n, FormulaMode mode = FormulaMode::corrected);
std::vector<XPoly> family_closed_table(const FamilySpec& spec, int variant, std::size_t max_n,
                                       FormulaMode mode = FormulaMode::corrected);

/// Classical construction independent of both the closed formula and the
/// series: three-term recurrences (Chebyshev T/U, Legendre, Hermite,
/// Gegenbauer, Laguerre), x(x-na)^(n-1) for Abel, and the Bernoulli-number
/// recurrence for generalized Bernoulli at alpha = 1.
std::optional<XPoly> family_reference(const FamilySpec& spec, std::size_t n);
std::optional<std::vector<XPoly>> family_reference_table(const FamilySpec& spec, std::size_t max_n);

/// Coefficient of t^n in (1-t)^(-alpha-1), as C(n+alpha, n) and as
/// (1/n!) sum_k (alpha+1)^k (-1)^(n-k) s(n,k).
Rational laguerre_weight_binomial(std::size_t n, const Rational& alpha);
Rational laguerre_weight_stirling(std::size_t n, const Rational& alpha);

/// Humbert variant 2 before the substitution n - k = 2m, with the parity
/// factor ((-1)^(n-k)+1)/2 skipping odd n - k.
XPoly humbert_parity_form(const Rational& lambda, std::size_t n);

/// Bernoulli numbers B_0..B_max_n from sum_{j=0..n} C(n+1,j) B_j = 0.
std::vector<Rational> bernoulli_numbers(std::size_t max_n);

/// One documented fix applied in corrected mode.
struct Correction {
    Family family;
    int variant;
    std::string index_fixed;  // e.g. "[n-j,k] -> [n-i,k]"
    std::string note;
};

std::span<const Correction> correction_ledger();
std::vector<Correction> corrections_for(Family family, int variant);

}  // namespace composita
