#include "composita/xpoly.hpp"

#include <ostream>
#include <utility>

#include "composita/errors.hpp"

namespace composita {

XPoly::XPoly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

XPoly::XPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

XPoly XPoly::monomial(const Rational& c, std::size_t power) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return XPoly(std::move(v));
}

void XPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational XPoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational XPoly::eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

XPoly XPoly::compose(const XPoly& inner) const {
    XPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + XPoly(*it);
    return acc;
}

XPoly XPoly::pow(unsigned exponent) const {
    XPoly result(1);
    XPoly base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPoly(std::move(out));
}

XPoly& XPoly::operator*=(const XPoly& other) { return *this = *this * other; }

XPoly& XPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string XPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Rational& c = coeffs_[idx];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body;
        if (idx == 0) {
            body = mag.to_string();
        } else {
            if (!mag.is_one()) body = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
            body += "x";
            if (idx > 1) body += "^" + std::to_string(idx);
        }
        out += body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.to_string(); }

XPoly xpoly_arith(const XPoly& p, const XPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
    }
    throw ArgumentError("unknown polynomial operation");
}

Rational xpoly_eval(const XPoly& p, const Rational& x0) { return p.eval(x0); }

XPoly binom_x(const Rational& shift, unsigned k) {
    XPoly acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= XPoly(std::vector<Rational>{shift - Rational(static_cast<long>(i)), Rational(1)});
    }
    return acc * (Rational(1) / Rational(factorial(k)));
}

XPoly falling_factorial_x(unsigned k) {
    XPoly acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= XPoly(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    return acc;
}

}  // namespace composita
