#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "composita/composita.hpp"
#include "composita/rational.hpp"
#include "composita/series.hpp"
#include "composita/verify.hpp"
#include "composita/xpoly.hpp"
#include "json.hpp"

namespace composita {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings; polynomials list x^0.. upward, with the zero
// polynomial as ["0"].
Json to_json(const Rational& r);
Json to_json(const XPoly& p);
Json to_json(const Series& s);                        // {"order":N,"coeffs":[...]}
Json to_json(const Composita& c);                     // {"rows":N,"triangle":[[F(1,1)],[F(2,1),F(2,2)],...]}
Json to_json(const VerificationVerdict& v);
Json to_json(std::span<const VerificationVerdict> verdicts);

/// Compact dump followed by a newline.
std::string json_text(const Json& doc);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// Left-aligned columns separated by two spaces; trailing blanks trimmed.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

/// Coefficients c_0..c_{width-1}, padding with zeros; width 0 means degree + 1
/// (at least one entry).
std::vector<Rational> dense_coefficients(const XPoly& p, std::size_t width = 0);

}  // namespace composita
