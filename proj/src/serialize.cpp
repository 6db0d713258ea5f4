#include "composita/serialize.hpp"

#include <algorithm>

namespace composita {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const XPoly& p) {
    Json out = Json::array();
    for (const auto& c : dense_coefficients(p)) out.push_back(to_json(c));
    return out;
}

Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Composita& c) {
    Json rows = Json::array();
    for (std::size_t n = 1; n <= c.order(); ++n) {
        Json row = Json::array();
        for (const auto& entry : c.row(n)) row.push_back(to_json(entry));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", c.order()}, {"triangle", std::move(rows)}};
}

Json to_json(const VerificationVerdict& v) {
    return Json{
        {"family", family_name(v.family)},
        {"variant", v.variant},
        {"max_n", v.max_n},
        {"status", verdict_status_name(v.status)},
        {"first_mismatch", v.first_mismatch ? Json(*v.first_mismatch) : Json(nullptr)},
        {"note", v.note},
    };
}

Json to_json(std::span<const VerificationVerdict> verdicts) {
    Json out = Json::array();
    for (const auto& v : verdicts) out.push_back(to_json(v));
    return out;
}

std::string json_text(const Json& doc) { return doc.dump() + "\n"; }

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

std::vector<Rational> dense_coefficients(const XPoly& p, std::size_t width) {
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    if (width == 0) width = std::max<std::size_t>(out.size(), 1);
    out.resize(std::max(width, out.size()), Rational(0));
    return out;
}

}  // namespace composita
