#pragma once

// Generating-function expressions over t and x.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := '-' factor | atom ('^' exponent)?
//   atom     := integer | 't' | 'x' | '(' expr ')' | func '(' expr ')'
//   func     := 'exp' | 'log' | 'lambertw'
//   exponent := ['-'] integer ('^' exponent)? | '(' expr ')' ('^' exponent)?
//
// A parenthesised exponent must fold to c0 + c1*x with rational c0, c1, so
// fractional powers are written t^(1/2). There is no implicit
// multiplication: "xt" is an unknown identifier.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "composita/errors.hpp"
#include "composita/rational.hpp"
#include "composita/series.hpp"

namespace composita {

enum class GfKind { constant, var_t, var_x, add, sub, mul, div, pow, exp, log, lambertw, neg };

// c0 + c1*x
struct GfExponent {
    Rational c0 = 0;
    Rational c1 = 0;

    bool is_integer() const { return c1.is_zero() && c0.is_integer(); }
    bool operator==(const GfExponent&) const = default;
};

struct GfNode {
    GfKind kind = GfKind::constant;
    Rational value = 0;     // constant
    GfExponent exponent;    // pow
    std::vector<std::shared_ptr<const GfNode>> children;
    SourceSpan span;
};

using GfAst = std::shared_ptr<const GfNode>;

/// Structural equality; source spans are ignored.
bool gf_equal(const GfNode& a, const GfNode& b);

/// Throws ParseError carrying a 1-based character position.
GfAst parse_gf(std::string_view source);

/// Canonical text that parses back to an equal tree.
std::string format_gf(const GfNode& node);

/// Bindings may fix x to a rational value. Division by a series without a
/// constant term cancels the common power of t first. Series domain
/// failures are rethrown as EvalError with the span of the offending node.
Series evaluate_gf(const GfNode& node, std::size_t order, const std::map<std::string, Rational>& bindings = {});
Series evaluate_gf(std::string_view source, std::size_t order, const std::map<std::string, Rational>& bindings = {});

}  // namespace composita
