#include "composita/rational.hpp"

#include <ostream>

#include "composita/errors.hpp"

namespace composita {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string digits(text);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c == '-' && i == 0 && digits.size() > 1) continue;
        if (c < '0' || c > '9') ok = false;
    }
    if (!ok) throw ArgumentError("invalid rational '" + std::string(whole) + "'");
    return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den < 0) throw ArgumentError("invalid rational '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash), text), den);
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw ArithmeticError("zero raised to a negative power");
        return Rational(1) / pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1U) != 0) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw ArithmeticError("division by zero");
    value_ /= other.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw ArgumentError("unknown arithmetic operation");
}

Rational binom_generalized(const Rational& alpha, unsigned k) {
    Rational num(1);
    for (unsigned i = 0; i < k; ++i) num *= alpha - Rational(static_cast<long>(i));
    return num / Rational(factorial(k));
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace composita
