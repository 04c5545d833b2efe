#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "padisc/bigint.hpp"
#include "padisc/padic.hpp"

namespace padisc {

/// Exact p-adic discrepancy of a finite point set with the ball that attains it.
///
/// witness_level is empty when the supremum is the tail limit c*/N (the
/// largest exact-value multiplicity over N), which no single ball attains.
/// Ties go to the smaller level, then the smaller residue; the tail wins only
/// when strictly larger.
struct DiscrepancyResult {
    Rational value;
    std::optional<unsigned> witness_level;
    std::optional<BigInt> witness_residue;
    unsigned separation_depth = 1;

    bool is_tail() const noexcept { return !witness_level.has_value(); }
};

// 1 + max valuation(x_i - x_j) over distinct pairs; 1 if there are none.
// From this level on, ball counts equal exact-value multiplicities.
unsigned separation_depth(std::span<const BigInt> values, std::uint32_t p);

// sup over z in Z_p and k >= 1 of |#(x_i = z mod p^k)/N - p^-k|, exactly.
DiscrepancyResult padic_discrepancy(std::span<const BigInt> values, std::uint32_t p);

// Same supremum for points known mod p^K. Requires separation depth <= K - 1
// so that every inspected level is determined; otherwise PrecisionError.
DiscrepancyResult padic_discrepancy_truncated(std::span<const PAdicApprox> values);

// sup over [a, b) in [0, 1) of |#([a, b) ∩ X)/N - (b - a)| for points in [0, 1).
Rational real_extreme_discrepancy(std::span<const Rational> points);

enum class BoundOutcome { holds, fails, indeterminate };

std::string_view to_string(BoundOutcome outcome);

// Absolute slack for the floating-point upper bound comparison.
inline constexpr double meijer_tolerance = 1e-9;

struct MeijerCheck {
    bool lower_holds = false;    // delta < d, exact
    BoundOutcome upper = BoundOutcome::indeterminate;
    double upper_bound = 0.0;    // delta (2 + 2(p-1)/ln p * ln(1/delta))
    BoundOutcome outcome = BoundOutcome::indeterminate;

    bool holds() const noexcept { return outcome == BoundOutcome::holds; }
};

// delta: p-adic discrepancy, d: real discrepancy of the Monna images.
MeijerCheck meijer_bound_check(const Rational& delta, const Rational& d, std::uint32_t p);

}  // namespace padisc
