#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "padisc/polynomial.hpp"

namespace padisc {

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

// Outcome of exhaustively evaluating f on Z/mZ.
struct PermutationCheck {
    bool bijective = false;
    std::optional<std::uint64_t> missing_residue;                     // smallest value not hit
    std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;  // first x < y with f(x) = f(y)
};

PermutationCheck check_permutation_mod(const IntPolynomial& f, std::uint64_t m,
                                       std::uint64_t cap = default_enumeration_cap);

bool is_permutation_mod(const IntPolynomial& f, std::uint64_t m, std::uint64_t cap = default_enumeration_cap);

// All x in [0, p) with f(x) = 0 mod p, ascending.
std::vector<std::uint64_t> roots_mod(const IntPolynomial& f, std::uint64_t p);

enum class VerdictMethod { brute_force, noebauer, associated_formula };

std::string_view to_string(VerdictMethod method);

struct MissingResidue {
    unsigned level;  // residue is taken mod p^level
    std::uint64_t residue;
};

struct Collision {
    unsigned level;
    std::uint64_t first;
    std::uint64_t second;
};

/// Low-discrepancy classification of (f, p) together with its certificates.
///
/// For the brute-force and Noebauer methods low_discrepancy is exactly
/// perm_mod_p && perm_mod_p2. A failing mod-p test always carries a level-1
/// missing residue; a mod-p permutation failing mod p^2 always carries a
/// derivative root (and the collision r, r + p that it forces).
struct Verdict {
    bool low_discrepancy = false;
    bool perm_mod_p = false;
    bool perm_mod_p2 = false;
    std::optional<std::uint64_t> derivative_root;
    std::optional<MissingResidue> missing_residue;
    std::optional<Collision> collision;
    VerdictMethod method = VerdictMethod::brute_force;
};

// Permutation mod p^2 decided as "permutation mod p and f' has no root mod p".
Verdict noebauer_mod_p2(const IntPolynomial& f, std::uint32_t p);

// Ground truth: both permutation properties decided by enumeration, then
// cross-checked against noebauer_mod_p2 (disagreement throws InternalError).
Verdict classify_low_discrepancy(const IntPolynomial& f, std::uint32_t p,
                                 std::uint64_t cap = default_enumeration_cap);

// Verdict read off the associated polynomials alone: g1 must permute Z/pZ and
// g2 must be root-free mod p. Reported for comparison, never authoritative.
Verdict classify_via_associated(const IntPolynomial& f, std::uint32_t p);

struct DivergenceEntry {
    IntPolynomial polynomial;
    IntPolynomial g1;
    IntPolynomial g2;
    Verdict ground_truth;
    Verdict associated;
};

struct DivergenceScanOptions {
    std::uint32_t p = 3;
    unsigned max_degree = 4;
    // Coefficients range over [coefficient_begin, coefficient_end), canonicalized mod p.
    long long coefficient_begin = 0;
    long long coefficient_end = 3;
    unsigned workers = 1;
    std::uint64_t cap = default_enumeration_cap;
};

// Every polynomial of degree <= max_degree (coefficients from the canonicalized
// range) on which classify_via_associated and classify_low_discrepancy
// disagree. Ordered lexicographically by the degree-descending coefficient list.
std::vector<DivergenceEntry> divergence_scan(const DivergenceScanOptions& options);

}  // namespace padisc
