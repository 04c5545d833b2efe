#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "padisc/bigint.hpp"
#include "padisc/padic.hpp"
#include "padisc/sequence.hpp"

namespace padisc {

// alpha must be a rational in (0, 1]; the exponent N^alpha is handled exactly
// by raising both sides of the radius comparison to the denominator.
struct PairCorrInput {
    std::vector<BigInt> values;
    std::uint32_t p = 3;
    Rational alpha = 1;
    Rational s = 1;
};

// Smallest k >= 0 with p^-k <= s / N^alpha, so that
// |x - y|_p <= s / N^alpha  <=>  x = y mod p^k. Throws DomainError for s <= 0.
unsigned long threshold_level(const Rational& s, std::size_t n, const Rational& alpha, std::uint32_t p);

// Ordered pairs i != j with x_i = x_j mod p^k.
BigInt pair_count(std::span<const BigInt> values, std::uint32_t p, unsigned long k);
BigInt pair_count(std::span<const PAdicApprox> values, unsigned long k);

// p^k / N^2 * pair_count, with k = threshold_level(s, N, alpha, p).
Rational f_statistic(const PairCorrInput& input);

struct PairCorrRow {
    std::size_t n;
    Rational s;
    unsigned long level;
    BigInt pairs;
    Rational value;
};

// F evaluated on the first N terms for every N in the schedule and every s,
// in schedule order (s varying fastest).
std::vector<PairCorrRow> ppc_sweep(const SequenceSpec& spec, const Rational& alpha, std::span<const Rational> s_list,
                                   std::span<const std::size_t> n_schedule);

}  // namespace padisc
