#include "composita/stirling.hpp"

#include <string>

#include "composita/errors.hpp"

namespace composita {

StirlingTable::StirlingTable(StirlingKind kind, std::size_t size) : kind_(kind), size_(size), rows_(size + 1) {
    rows_[0] = {BigInt(1)};
    for (std::size_t n = 0; n < size; ++n) {
        auto& next = rows_[n + 1];
        next.assign(n + 2, BigInt(0));
        const auto& row = rows_[n];
        for (std::size_t k = 1; k <= n + 1; ++k) {
            BigInt value = row.size() > k - 1 ? row[k - 1] : BigInt(0);
            if (k <= n) {
                const unsigned long weight = kind == StirlingKind::first ? n : k;
                value += row[k] * weight;
            }
            next[k] = value;
        }
    }
}

const BigInt& StirlingTable::at(std::size_t n, std::size_t k) const {
    if (n > size_ || k > n) {
        throw ArgumentError("Stirling index (" + std::to_string(n) + "," + std::to_string(k) +
                            ") outside table of size " + std::to_string(size_));
    }
    return rows_[n][k];
}

BigInt StirlingTable::get(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    return at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

BigInt stirling(StirlingKind kind, long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        throw ArgumentError("Stirling number needs 0 <= k <= n, got (" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
    }
    return StirlingTable(kind, static_cast<std::size_t>(n)).at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

BigInt stirling2_explicit(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        throw ArgumentError("Stirling number needs 0 <= k <= n, got (" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
    }
    BigInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
        BigInt term = binomial(k, j) * power;
        if ((k - j) % 2 != 0) term = -term;
        sum += term;
    }
    BigInt result;
    mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), factorial(static_cast<unsigned>(k)).get_mpz_t());
    return result;
}

StirlingPair::StirlingPair(std::size_t size)
    : first_(StirlingKind::first, size), second_(StirlingKind::second, size) {}

Rational StirlingPair::first_signed(long n, long k) const {
    Rational v = first(n, k);
    return ((n - k) % 2 != 0) ? -v : v;
}

}  // namespace composita
