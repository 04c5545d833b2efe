#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "padisc/bigint.hpp"

namespace padisc {

// Primes below this bound are verified by trial division; larger ones are trusted.
inline constexpr std::uint64_t prime_check_bound = std::uint64_t{1} << 20;

// Throws DomainError unless p >= 2 and p passes the primality check.
void require_prime(std::uint64_t p);

/// An element of Z_p known modulo p^K, stored as K little-endian base-p digits.
///
/// The precision K is fixed at construction. Operations that would need a
/// digit at index >= K throw PrecisionError instead of padding with zeros.
class PAdicApprox {
public:
    PAdicApprox(std::uint32_t p, std::vector<std::uint32_t> digits);

    std::uint32_t prime() const noexcept { return p_; }
    std::size_t precision() const noexcept { return digits_.size(); }
    std::span<const std::uint32_t> digits() const noexcept { return digits_; }
    std::uint32_t digit(std::size_t i) const;

    // Sum of digits[i] * p^i, in [0, p^K).
    BigInt residue() const;
    BigInt modulus() const;

    // n * a + b evaluated modulo p^K; both operands must share p and K.
    static PAdicApprox affine(const BigInt& n, const PAdicApprox& a, const PAdicApprox& b);

    // Equality of residues. Comparing different primes or precisions throws.
    friend bool operator==(const PAdicApprox& lhs, const PAdicApprox& rhs);

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> digits_;
};

// Largest m with p^m | x. Throws DomainError for x = 0.
unsigned long valuation(const BigInt& x, std::uint32_t p);

// p^-valuation(x), and 0 for x = 0.
Rational abs_p(const BigInt& x, std::uint32_t p);

// Smallest k >= 0 with p^-k <= r; radii >= 1 give 0 (the whole ring).
unsigned long ball_level(const Rational& radius, std::uint32_t p);

// Base-p digits of x mod p^K. Negative x is reduced into [0, p^K) first.
PAdicApprox digits_of(const BigInt& x, std::uint32_t p, std::size_t precision);

// Digit reversal sum(digits[i] * p^(-i-1)), exact and in [0, 1).
Rational monna_map(const PAdicApprox& x);

}  // namespace padisc
