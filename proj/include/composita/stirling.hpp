#pragma once

#include <cstddef>
#include <vector>

#include "composita/rational.hpp"

namespace composita {

enum class StirlingKind { first, second };

/// Triangle of Stirling numbers for 0 <= k <= n <= size, built by the
/// recurrences
///   [n+1,k] = [n,k-1] + n [n,k]      (unsigned first kind: permutations by cycles)
///   {n+1,k} = {n,k-1} + k {n,k}      (second kind: set partitions)
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, std::size_t size);

    StirlingKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return size_; }

    /// Throws ArgumentError unless 0 <= k <= n <= size.
    const BigInt& at(std::size_t n, std::size_t k) const;
    /// Zero outside the triangle instead of throwing; k and n may be negative.
    BigInt get(long n, long k) const;

private:
    StirlingKind kind_;
    std::size_t size_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Throws ArgumentError unless 0 <= k <= n.
BigInt stirling(StirlingKind kind, long n, long k);

/// {n,k} = (1/k!) sum_{j=0..k} (-1)^(k-j) C(k,j) j^n
BigInt stirling2_explicit(long n, long k);

/// Both Stirling triangles, with the signed first kind s(n,k) = (-1)^(n-k) [n,k]
/// that appears in the coefficient formulas (the exponential generating
/// function of column k being ln^k(1+t)/k!).
class StirlingPair {
public:
    explicit StirlingPair(std::size_t size);

    std::size_t size() const noexcept { return first_.size(); }
    /// [n,k]
    Rational first(long n, long k) const { return Rational(first_.get(n, k)); }
    /// (-1)^(n-k) [n,k]
    Rational first_signed(long n, long k) const;
    /// {n,k}
    Rational second(long n, long k) const { return Rational(second_.get(n, k)); }

private:
    StirlingTable first_;
    StirlingTable second_;
};

}  // namespace composita
