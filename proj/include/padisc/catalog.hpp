#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padisc/polynomial.hpp"

namespace padisc {

// Which published list an entry comes from: Dickson's normalized permutation
// polynomials of degree <= 6 with nonzero linear term, or the subset that
// generates low-discrepancy sequences.
enum class TableId { dickson, low_discrepancy };

enum class ParameterPredicate { none, nonzero, square, non_square, non_fourth_power };

// How a row's ± signs were expanded. Rows with two ± signs are expanded both
// with the signs moving together (coupled) and independently.
enum class SignReading { single, coupled, independent };

// What the derivative-root table states for the entry's derivative mod p.
enum class RootExpectation { not_listed, exact, none, exists_for_each_parameter };

std::string_view to_string(TableId table);
std::string_view to_string(ParameterPredicate predicate);
std::string_view to_string(SignReading reading);
std::string_view to_string(RootExpectation expectation);

// numerator / denominator * a^parameter_power * x^degree, the denominator
// inverted mod the concrete prime.
struct FamilyTerm {
    long long numerator;
    unsigned degree;
    unsigned parameter_power = 0;
    long long denominator = 1;
};

// Primes sampled for the congruence family p = 5m ± 2.
inline constexpr std::array<std::uint32_t, 6> five_m_pm_two_sample{2, 3, 7, 13, 17, 23};

struct PrimeSpec {
    std::optional<std::uint32_t> fixed;  // empty: every prime p = ±2 mod 5

    bool admits(std::uint32_t p) const;
    std::string describe() const;
};

struct DicksonEntry {
    std::string label;  // concrete signs, parameter a
    std::string row;    // the table row with its ± signs
    std::vector<FamilyTerm> terms;
    PrimeSpec primes;
    ParameterPredicate predicate = ParameterPredicate::none;
    TableId table = TableId::dickson;
    SignReading reading = SignReading::single;
    RootExpectation roots = RootExpectation::not_listed;
    std::vector<std::uint64_t> expected_roots;  // RootExpectation::exact
    std::string derivative_label;
};

const std::vector<DicksonEntry>& dickson_entries();

// Parameters a in [0, p) satisfying the entry's predicate; {0} when the entry
// has no parameter.
std::vector<std::uint64_t> admissible_parameters(const DicksonEntry& entry, std::uint32_t p);

// Coefficients reduced into [0, p). Throws DomainError for an incompatible prime.
IntPolynomial instantiate(const DicksonEntry& entry, std::uint64_t a, std::uint32_t p);

// The fixed prime, or the 5m ± 2 sample.
std::vector<std::uint32_t> verification_primes(const DicksonEntry& entry);

struct ParameterCheck {
    std::optional<std::uint64_t> parameter;
    IntPolynomial instance;
    bool permutation = false;
    std::optional<bool> low_discrepancy;
    std::vector<std::uint64_t> derivative_roots;
    std::vector<std::string> failures;
};

struct EntryReport {
    const DicksonEntry* entry = nullptr;
    std::uint32_t p = 0;
    std::vector<ParameterCheck> checks;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

// Checks every admissible instantiation at p: permutation mod p; for
// low-discrepancy entries also the full classification; the derivative roots
// against the tabulated expectation when one exists.
EntryReport verify_entry(const DicksonEntry& entry, std::uint32_t p);

struct SearchConstraints {
    bool monic = true;
    bool zero_constant = true;
    bool nonzero_linear = false;
};

struct SearchOptions {
    unsigned workers = 1;
    std::uint64_t candidate_cap = 100'000'000;
};

std::uint64_t search_space_size(std::uint32_t p, unsigned max_degree, const SearchConstraints& constraints);

// All polynomials of degree 1..max_degree with coefficients in [0, p) meeting
// the constraints that generate low-discrepancy sequences. Ordered by degree,
// then lexicographically by the degree-descending coefficient list.
std::vector<IntPolynomial> exhaustive_search(std::uint32_t p, unsigned max_degree, const SearchConstraints& constraints,
                                             const SearchOptions& options = {});

enum class Explanation { linear, low_discrepancy_table, power_linear_family, affine_equivalent, unexplained };

std::string_view to_string(Explanation explanation);

struct MatchEntry {
    IntPolynomial polynomial;
    Explanation kind = Explanation::unexplained;
    std::string source;
};

struct TableMatch {
    std::vector<MatchEntry> entries;
    // Tabulated or family polynomials of degree <= max_degree that the found
    // list does not contain (normalized: monic, zero constant).
    std::vector<MatchEntry> unmatched_references;

    std::size_t count(Explanation kind) const;
    bool clean() const { return count(Explanation::unexplained) == 0 && unmatched_references.empty(); }
};

// Explains each found polynomial as linear, a low-discrepancy table instance,
// a member of x^p + ax + b (a, a+1 units), or an affine image A(g(Bx)) of one
// of these; everything else is unexplained. max_degree defaults to the
// largest degree in `found`.
TableMatch match_against_table(std::span<const IntPolynomial> found, std::uint32_t p,
                               std::optional<unsigned> max_degree = std::nullopt);

}  // namespace padisc
