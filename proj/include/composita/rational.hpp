#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace composita {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}
    /// Throws ArithmeticError when `den` is zero.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p" or "p/q" with decimal integers.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer power; negative exponents invert (zero base then throws).
    Rational pow(long exponent) const;

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { add, sub, mul, div };

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// alpha (alpha-1) ... (alpha-k+1) / k!
Rational binom_generalized(const Rational& alpha, unsigned k);

BigInt factorial(unsigned n);

/// Binomial coefficient for integer arguments; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace composita
