#include "padisc/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "padisc/detail/parallel.hpp"
#include "padisc/error.hpp"
#include "padisc/padic.hpp"
#include "padisc/permcheck.hpp"

namespace padisc {

std::string_view to_string(TableId table) {
    return table == TableId::dickson ? "dickson" : "lds";
}

std::string_view to_string(ParameterPredicate predicate) {
    switch (predicate) {
        case ParameterPredicate::none: return "none";
        case ParameterPredicate::nonzero: return "nonzero";
        case ParameterPredicate::square: return "square";
        case ParameterPredicate::non_square: return "non_square";
        case ParameterPredicate::non_fourth_power: return "non_fourth_power";
    }
    return "unknown";
}

std::string_view to_string(SignReading reading) {
    switch (reading) {
        case SignReading::single: return "single";
        case SignReading::coupled: return "coupled";
        case SignReading::independent: return "independent";
    }
    return "unknown";
}

std::string_view to_string(RootExpectation expectation) {
    switch (expectation) {
        case RootExpectation::not_listed: return "not_listed";
        case RootExpectation::exact: return "exact";
        case RootExpectation::none: return "none";
        case RootExpectation::exists_for_each_parameter: return "exists_for_each_parameter";
    }
    return "unknown";
}

bool PrimeSpec::admits(std::uint32_t p) const {
    if (fixed) return p == *fixed;
    return is_prime(p) && (p % 5 == 2 || p % 5 == 3);
}

std::string PrimeSpec::describe() const { return fixed ? std::to_string(*fixed) : "5m±2"; }

namespace {

struct RowSigns {
    int first;
    int second;
    SignReading reading;
};

std::string sign(int s) { return s > 0 ? "+" : "-"; }

std::vector<DicksonEntry> build_entries() {
    using T = FamilyTerm;
    std::vector<DicksonEntry> out;
    const PrimeSpec five_m_pm_two{};
    auto fixed = [](std::uint32_t p) { return PrimeSpec{p}; };

    auto add = [&](DicksonEntry e) { out.push_back(std::move(e)); };

    // Dickson's list: normalized permutation polynomials of degree <= 6 with
    // nonzero linear coefficient.
    add({"x^3 - ax", "x^3 - ax", {T{1, 3}, T{-1, 1, 1}}, fixed(3), ParameterPredicate::non_square, TableId::dickson,
         SignReading::single, RootExpectation::not_listed, {}, ""});
    add({"x^4 + 3x", "x^4 ± 3x", {T{1, 4}, T{3, 1}}, fixed(7), ParameterPredicate::none, TableId::dickson,
         SignReading::single, RootExpectation::exact, {1, 2, 4}, "4x^3 + 3"});
    add({"x^4 - 3x", "x^4 ± 3x", {T{1, 4}, T{-3, 1}}, fixed(7), ParameterPredicate::none, TableId::dickson,
         SignReading::single, RootExpectation::exact, {3, 5, 6}, "4x^3 - 3"});
    add({"x^5 - ax", "x^5 - ax", {T{1, 5}, T{-1, 1, 1}}, fixed(5), ParameterPredicate::non_fourth_power,
         TableId::dickson, SignReading::single, RootExpectation::not_listed, {}, ""});
    for (int s : {1, -1}) {
        add({"x^5 + ax^3 " + sign(s) + " x^2 + 3a^2x", "x^5 + ax^3 ± x^2 + 3a^2x",
             {T{1, 5}, T{1, 3, 1}, T{s, 2}, T{3, 1, 2}}, fixed(7), ParameterPredicate::non_square, TableId::dickson,
             SignReading::single, RootExpectation::exists_for_each_parameter, {},
             "5x^4 + 3ax^2 " + sign(s) + " 2x + 3a^2"});
    }
    add({"x^5 + ax^3 + 5^-1a^2x", "x^5 + ax^3 + 5^-1a^2x", {T{1, 5}, T{1, 3, 1}, T{1, 1, 2, 5}}, five_m_pm_two,
         ParameterPredicate::nonzero, TableId::dickson, SignReading::single, RootExpectation::not_listed, {}, ""});
    add({"x^5 + ax^3 + 3a^2x", "x^5 + ax^3 + 3a^2x", {T{1, 5}, T{1, 3, 1}, T{3, 1, 2}}, fixed(13),
         ParameterPredicate::non_square, TableId::dickson, SignReading::single,
         RootExpectation::exists_for_each_parameter, {}, "5x^4 + 3ax^2 + 3a^2"});
    add({"x^5 + 2ax^3 + a^2x", "x^5 + 2ax^3 + a^2x", {T{1, 5}, T{2, 3, 1}, T{1, 1, 2}}, fixed(5),
         ParameterPredicate::non_square, TableId::dickson, SignReading::single, RootExpectation::none, {},
         "5x^4 + 6ax^2 + a^2"});
    for (int c : {2, 4}) {
        for (int s : {1, -1}) {
            add({"x^6 " + sign(s) + " " + std::to_string(c) + "x", "x^6 ± " + std::to_string(c) + "x",
                 {T{1, 6}, T{s * c, 1}}, fixed(11), ParameterPredicate::none, TableId::dickson, SignReading::single,
                 RootExpectation::none, {}, "6x^5 " + sign(s) + " " + std::to_string(c)});
        }
    }
    const std::array<RowSigns, 4> pairings{RowSigns{1, 1, SignReading::coupled}, RowSigns{-1, -1, SignReading::coupled},
                                           RowSigns{1, -1, SignReading::independent},
                                           RowSigns{-1, 1, SignReading::independent}};
    for (const auto& [s1, s2, reading] : pairings) {
        add({"x^6 " + sign(s1) + " a^2x^3 + ax^2 " + sign(s2) + " 5x", "x^6 ± a^2x^3 + ax^2 ± 5x",
             {T{1, 6}, T{s1, 3, 2}, T{1, 2, 1}, T{5 * s2, 1}}, fixed(11), ParameterPredicate::square, TableId::dickson,
             reading, RootExpectation::exists_for_each_parameter, {},
             "6x^5 " + sign(s1) + " 3a^2x^2 + 2ax " + sign(s2) + " 5"});
    }
    for (const auto& [s1, s2, reading] : pairings) {
        add({"x^6 " + sign(s1) + " 4a^2x^3 + ax^2 " + sign(s2) + " 4x", "x^6 ± 4a^2x^3 + ax^2 ± 4x",
             {T{1, 6}, T{4 * s1, 3, 2}, T{1, 2, 1}, T{4 * s2, 1}}, fixed(11), ParameterPredicate::non_square,
             TableId::dickson, reading, RootExpectation::exists_for_each_parameter, {},
             "6x^5 " + sign(s1) + " 12a^2x^2 + 2ax " + sign(s2) + " 4"});
    }

    // Entries generating low-discrepancy sequences.
    add({"x^5 + 2ax^3 + a^2x", "x^5 + 2ax^3 + a^2x", {T{1, 5}, T{2, 3, 1}, T{1, 1, 2}}, fixed(5),
         ParameterPredicate::non_square, TableId::low_discrepancy, SignReading::single, RootExpectation::none, {},
         "5x^4 + 6ax^2 + a^2"});
    for (int c : {2, 4}) {
        for (int s : {1, -1}) {
            add({"x^6 " + sign(s) + " " + std::to_string(c) + "x", "x^6 ± " + std::to_string(c) + "x",
                 {T{1, 6}, T{s * c, 1}}, fixed(11), ParameterPredicate::none, TableId::low_discrepancy,
                 SignReading::single, RootExpectation::none, {}, "6x^5 " + sign(s) + " " + std::to_string(c)});
        }
    }
    add({"x^5 + ax^3 + 5^-1a^2x", "x^5 + ax^3 + 5^-1a^2x", {T{1, 5}, T{1, 3, 1}, T{1, 1, 2, 5}}, five_m_pm_two,
         ParameterPredicate::nonzero, TableId::low_discrepancy, SignReading::single, RootExpectation::not_listed, {},
         ""});
    return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1) result = result * base % m;
        base = base * base % m;
        exponent >>= 1;
    }
    return result;
}

bool is_power_residue(std::uint64_t a, unsigned e, std::uint32_t p) {
    for (std::uint64_t y = 1; y < p; ++y) {
        if (pow_mod(y, e, p) == a % p) return true;
    }
    return false;
}

BigInt inverse_mod(long long value, std::uint32_t p) {
    BigInt v = floor_mod(BigInt(static_cast<long>(value)), BigInt(p));
    BigInt inv;
    if (v == 0 || mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), BigInt(p).get_mpz_t()) == 0) {
        throw DomainError("incompatible prime: " + std::to_string(value) + " is not invertible mod " +
                          std::to_string(p));
    }
    return inv;
}

}  // namespace

const std::vector<DicksonEntry>& dickson_entries() {
    static const std::vector<DicksonEntry> entries = build_entries();
    return entries;
}

std::vector<std::uint64_t> admissible_parameters(const DicksonEntry& entry, std::uint32_t p) {
    std::vector<std::uint64_t> params;
    if (entry.predicate == ParameterPredicate::none) {
        params.push_back(0);
        return params;
    }
    for (std::uint64_t a = 1; a < p; ++a) {
        bool ok = false;
        switch (entry.predicate) {
            case ParameterPredicate::nonzero: ok = true; break;
            case ParameterPredicate::square: ok = is_power_residue(a, 2, p); break;
            case ParameterPredicate::non_square: ok = !is_power_residue(a, 2, p); break;
            case ParameterPredicate::non_fourth_power: ok = !is_power_residue(a, 4, p); break;
            case ParameterPredicate::none: break;
        }
        if (ok) params.push_back(a);
    }
    return params;
}

IntPolynomial instantiate(const DicksonEntry& entry, std::uint64_t a, std::uint32_t p) {
    require_prime(p);
    if (!entry.primes.admits(p)) {
        throw DomainError("incompatible prime " + std::to_string(p) + " for " + entry.label + " (p = " +
                          entry.primes.describe() + ")");
    }
    const BigInt modulus(p);
    IntPolynomial f;
    for (const auto& t : entry.terms) {
        BigInt c = BigInt(static_cast<long>(t.numerator)) * ipow(BigInt(static_cast<unsigned long>(a)), t.parameter_power);
        if (t.denominator != 1) c *= inverse_mod(t.denominator, p);
        f += IntPolynomial::monomial(c, t.degree);
    }
    return reduce_coefficients(f, modulus);
}

std::vector<std::uint32_t> verification_primes(const DicksonEntry& entry) {
    if (entry.primes.fixed) return {*entry.primes.fixed};
    return {five_m_pm_two_sample.begin(), five_m_pm_two_sample.end()};
}

EntryReport verify_entry(const DicksonEntry& entry, std::uint32_t p) {
    require_prime(p);
    if (!entry.primes.admits(p)) {
        throw DomainError("incompatible prime " + std::to_string(p) + " for " + entry.label + " (p = " +
                          entry.primes.describe() + ")");
    }
    EntryReport report;
    report.entry = &entry;
    report.p = p;
    const auto params = admissible_parameters(entry, p);
    if (params.empty()) {
        report.failures.push_back("no admissible parameter a mod " + std::to_string(p));
    }
    for (const auto a : params) {
        ParameterCheck check;
        if (entry.predicate != ParameterPredicate::none) check.parameter = a;
        check.instance = instantiate(entry, a, p);
        check.permutation = is_permutation_mod(check.instance, p);
        check.derivative_roots = roots_mod(derivative(check.instance), p);
        const std::string where = render(check.instance) + (check.parameter ? " (a = " + std::to_string(a) + ")" : "");

        if (!check.permutation) {
            check.failures.push_back(where + " is not a permutation mod " + std::to_string(p));
        }
        if (entry.table == TableId::low_discrepancy) {
            check.low_discrepancy = classify_low_discrepancy(check.instance, p).low_discrepancy;
            if (!*check.low_discrepancy) {
                check.failures.push_back(where + " does not generate a low-discrepancy sequence");
            }
        }
        switch (entry.roots) {
            case RootExpectation::exact:
                if (check.derivative_roots != entry.expected_roots) {
                    check.failures.push_back("derivative of " + where + " has a different root set");
                }
                break;
            case RootExpectation::none:
                if (!check.derivative_roots.empty()) {
                    check.failures.push_back("derivative of " + where + " has roots mod " + std::to_string(p));
                }
                break;
            case RootExpectation::exists_for_each_parameter:
                if (check.derivative_roots.empty()) {
                    check.failures.push_back("derivative of " + where + " has no root mod " + std::to_string(p));
                }
                break;
            case RootExpectation::not_listed:
                break;
        }
        report.failures.insert(report.failures.end(), check.failures.begin(), check.failures.end());
        report.checks.push_back(std::move(check));
    }
    return report;
}

namespace {

struct DegreeBlock {
    unsigned degree;
    std::uint64_t offset;
    std::uint64_t count;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;  // [lo, hi] per coefficient, ascending index
};

std::vector<DegreeBlock> search_blocks(std::uint32_t p, unsigned max_degree, const SearchConstraints& c,
                                       std::uint64_t cap) {
    std::vector<DegreeBlock> blocks;
    std::uint64_t offset = 0;
    for (unsigned d = 1; d <= max_degree; ++d) {
        DegreeBlock b{d, offset, 1, {}};
        for (unsigned i = 0; i <= d; ++i) {
            std::pair<std::uint64_t, std::uint64_t> r{0, p - 1};
            if (i == d) {
                r = c.monic ? std::pair<std::uint64_t, std::uint64_t>{1, 1} : std::pair<std::uint64_t, std::uint64_t>{1, p - 1};
            } else if (i == 0 && c.zero_constant) {
                r = {0, 0};
            } else if (i == 1 && c.nonzero_linear) {
                r = {1, p - 1};
            }
            const std::uint64_t width = r.second - r.first + 1;
            if (b.count > cap / width) {
                throw EnumerationLimitError("search space exceeds cap of " + std::to_string(cap) + " candidates");
            }
            b.count *= width;
            b.ranges.push_back(r);
        }
        if (offset > cap - b.count) {
            throw EnumerationLimitError("search space exceeds cap of " + std::to_string(cap) + " candidates");
        }
        offset += b.count;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace

std::uint64_t search_space_size(std::uint32_t p, unsigned max_degree, const SearchConstraints& constraints) {
    require_prime(p);
    std::uint64_t total = 0;
    for (const auto& b : search_blocks(p, max_degree, constraints, ~std::uint64_t{0})) total += b.count;
    return total;
}

std::vector<IntPolynomial> exhaustive_search(std::uint32_t p, unsigned max_degree, const SearchConstraints& constraints,
                                             const SearchOptions& options) {
    require_prime(p);
    const auto blocks = search_blocks(p, max_degree, constraints, options.candidate_cap);
    const std::uint64_t total = blocks.empty() ? 0 : blocks.back().offset + blocks.back().count;
    const std::uint64_t p2 = std::uint64_t{p} * p;

    return detail::ordered_parallel_collect<IntPolynomial>(
        total, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<IntPolynomial> hits;
            std::vector<std::uint64_t> coeffs;
            std::vector<std::uint64_t> deriv;
            std::vector<char> seen(p);
            for (std::uint64_t index = begin; index < end; ++index) {
                const auto block = std::prev(std::upper_bound(
                    blocks.begin(), blocks.end(), index,
                    [](std::uint64_t i, const DegreeBlock& b) { return i < b.offset; }));
                std::uint64_t rest = index - block->offset;
                coeffs.assign(block->degree + 1, 0);
                for (unsigned i = 0; i <= block->degree; ++i) {
                    const auto [lo, hi] = block->ranges[i];
                    const std::uint64_t width = hi - lo + 1;
                    coeffs[i] = lo + rest % width;
                    rest /= width;
                }

                // permutation mod p
                std::fill(seen.begin(), seen.end(), 0);
                bool bijective = true;
                for (std::uint64_t x = 0; x < p && bijective; ++x) {
                    std::uint64_t acc = 0;
                    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
                    if (seen[acc]) bijective = false;
                    seen[acc] = 1;
                }
                bool rootless = bijective;
                if (bijective) {
                    deriv.resize(block->degree);
                    for (unsigned k = 1; k <= block->degree; ++k) deriv[k - 1] = (k % p) * coeffs[k] % p;
                    for (std::uint64_t x = 0; x < p && rootless; ++x) {
                        std::uint64_t acc = 0;
                        for (auto it = deriv.rbegin(); it != deriv.rend(); ++it) acc = (acc * x + *it) % p;
                        rootless = acc != 0;
                    }
                }

                std::vector<BigInt> big(coeffs.begin(), coeffs.end());
                IntPolynomial f(std::move(big));
                const bool by_enumeration = bijective && check_permutation_mod(f, p2, ~std::uint64_t{0} >> 1).bijective;
                if (bijective && rootless != by_enumeration) {
                    throw InternalError("derivative criterion and enumeration disagree for " + render(f));
                }
                if (rootless) hits.push_back(std::move(f));
            }
            return hits;
        });
}

std::string_view to_string(Explanation explanation) {
    switch (explanation) {
        case Explanation::linear: return "linear";
        case Explanation::low_discrepancy_table: return "lds_table";
        case Explanation::power_linear_family: return "power_linear_family";
        case Explanation::affine_equivalent: return "affine_equivalent";
        case Explanation::unexplained: return "unexplained";
    }
    return "unknown";
}

std::size_t TableMatch::count(Explanation kind) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [kind](const MatchEntry& e) { return e.kind == kind; }));
}

namespace {

using Key = std::vector<BigInt>;

// Monic with zero constant term; f must be nonconstant mod p.
IntPolynomial normalize(const IntPolynomial& f, std::uint32_t p) {
    const BigInt modulus(p);
    IntPolynomial g = reduce_coefficients(f, modulus);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), g.leading_coefficient().get_mpz_t(), modulus.get_mpz_t());
    std::vector<BigInt> c = g.coefficients();
    c[0] = 0;
    for (auto& a : c) a = floor_mod(a * inv, modulus);
    return IntPolynomial(std::move(c));
}

struct Reference {
    IntPolynomial polynomial;
    Explanation kind;
    std::string source;
};

std::vector<Reference> references_for(std::uint32_t p, unsigned max_degree) {
    std::vector<Reference> refs;
    if (max_degree >= 1) {
        refs.push_back({IntPolynomial(std::vector<BigInt>{0, 1}), Explanation::linear, "ax + b with a a unit"});
    }
    for (const auto& e : dickson_entries()) {
        if (e.table != TableId::low_discrepancy || !e.primes.admits(p)) continue;
        for (const auto a : admissible_parameters(e, p)) {
            IntPolynomial f = instantiate(e, a, p);
            if (f.degree() > static_cast<int>(max_degree)) continue;
            std::string source = e.label;
            if (e.predicate != ParameterPredicate::none) source += " (a = " + std::to_string(a) + ")";
            refs.push_back({std::move(f), Explanation::low_discrepancy_table, std::move(source)});
        }
    }
    if (p <= max_degree) {
        for (std::uint64_t a = 1; a + 1 < p; ++a) {
            IntPolynomial f = IntPolynomial::monomial(1, p) + IntPolynomial::monomial(BigInt(static_cast<unsigned long>(a)), 1);
            refs.push_back({std::move(f), Explanation::power_linear_family,
                            "x^p + ax + b (a = " + std::to_string(a) + ")"});
        }
    }
    return refs;
}

}  // namespace

TableMatch match_against_table(std::span<const IntPolynomial> found, std::uint32_t p,
                               std::optional<unsigned> max_degree) {
    require_prime(p);
    const BigInt modulus(p);
    std::vector<IntPolynomial> reduced;
    reduced.reserve(found.size());
    unsigned degree_bound = 0;
    for (const auto& f : found) {
        reduced.push_back(reduce_coefficients(f, modulus));
        degree_bound = std::max(degree_bound, static_cast<unsigned>(std::max(reduced.back().degree(), 0)));
    }
    if (max_degree) degree_bound = *max_degree;
    if (found.empty() && !max_degree) return {};

    const auto refs = references_for(p, degree_bound);
    std::map<Key, const Reference*> normalized;
    for (const auto& r : refs) {
        normalized.emplace(normalize(r.polynomial, p).coefficients(), &r);
    }

    TableMatch match;
    std::map<Key, bool> found_keys;
    for (std::size_t i = 0; i < found.size(); ++i) {
        const IntPolynomial& f = reduced[i];
        MatchEntry entry{found[i], Explanation::unexplained, ""};
        if (f.degree() >= 1) found_keys[normalize(f, p).coefficients()] = true;

        if (f.degree() == 1) {
            entry.kind = Explanation::linear;
            entry.source = "ax + b with a a unit";
        } else if (f.degree() >= 2) {
            const auto literal = std::find_if(refs.begin(), refs.end(), [&](const Reference& r) {
                return r.kind == Explanation::low_discrepancy_table && r.polynomial == f;
            });
            const IntPolynomial without_constant = f - IntPolynomial::constant(f.coefficient(0));
            const BigInt a = f.coefficient(1);
            const bool power_linear = f.degree() == static_cast<int>(p) && f.leading_coefficient() == 1 &&
                                      without_constant == IntPolynomial::monomial(1, p) + IntPolynomial::monomial(a, 1) &&
                                      a != 0 && a + 1 != modulus;
            if (literal != refs.end()) {
                entry.kind = Explanation::low_discrepancy_table;
                entry.source = literal->source;
            } else if (power_linear) {
                entry.kind = Explanation::power_linear_family;
                entry.source = "x^p + ax + b (a = " + a.get_str() + ")";
            } else {
                for (std::uint64_t c = 1; c < p && entry.kind == Explanation::unexplained; ++c) {
                    for (std::uint64_t d = 0; d < p; ++d) {
                        const IntPolynomial h = affine_compose(
                            f, AffineMap{1, 0}, AffineMap{BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(d))},
                            modulus);
                        const auto hit = normalized.find(normalize(h, p).coefficients());
                        if (hit != normalized.end()) {
                            entry.kind = Explanation::affine_equivalent;
                            entry.source = hit->second->source + " via x -> " + std::to_string(c) + "x + " +
                                           std::to_string(d);
                            break;
                        }
                    }
                }
            }
        }
        match.entries.push_back(std::move(entry));
    }

    for (const auto& r : refs) {
        if (!found_keys.contains(normalize(r.polynomial, p).coefficients())) {
            match.unmatched_references.push_back(MatchEntry{normalize(r.polynomial, p), r.kind, r.source});
        }
    }
    return match;
}

}  // namespace padisc
