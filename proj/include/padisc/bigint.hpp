#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padisc {

using BigInt = mpz_class;

// Always in lowest terms with a positive denominator; GMP keeps mpq_class
// canonical through arithmetic, make_rational() canonicalizes on entry.
using Rational = mpq_class;

Rational make_rational(const BigInt& numerator, const BigInt& denominator);

BigInt ipow(const BigInt& base, unsigned long exponent);
BigInt ipow(std::uint64_t base, unsigned long exponent);

// x mod m in [0, m) for m > 0.
BigInt floor_mod(const BigInt& x, const BigInt& m);

std::uint64_t to_u64(const BigInt& x);
bool fits_u64(const BigInt& x);

BigInt parse_bigint(std::string_view text);

// "u/v" or "u" (v = 1); whitespace is not accepted.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& x);

// "num/den", including "0/1" and "n/1", so that CSV columns parse uniformly.
std::string fraction_string(const Rational& q);

double to_double(const Rational& q);

// Deterministic trial division; intended for the small primes the library
// enumerates over.
bool is_prime(std::uint64_t n);

}  // namespace padisc
