#include "padisc/permcheck.hpp"

#include <limits>
#include <set>
#include <string>

#include "padisc/detail/parallel.hpp"
#include "padisc/error.hpp"
#include "padisc/padic.hpp"

namespace padisc {

PermutationCheck check_permutation_mod(const IntPolynomial& f, std::uint64_t m, std::uint64_t cap) {
    if (m == 0) {
        throw DomainError("modulus must be positive");
    }
    if (m > cap || m >= std::numeric_limits<std::uint32_t>::max()) {
        throw EnumerationLimitError("enumeration too large: modulus " + std::to_string(m) + " exceeds cap " +
                                    std::to_string(cap));
    }
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    const ResiduePolynomial g(f, m);
    std::vector<std::uint32_t> preimage(m, unset);
    PermutationCheck result;
    for (std::uint64_t x = 0; x < m; ++x) {
        auto& slot = preimage[g(x)];
        if (slot == unset) {
            slot = static_cast<std::uint32_t>(x);
        } else if (!result.collision) {
            result.collision = std::pair{std::uint64_t{slot}, x};
        }
    }
    result.bijective = !result.collision;
    if (!result.bijective) {
        for (std::uint64_t y = 0; y < m; ++y) {
            if (preimage[y] == unset) {
                result.missing_residue = y;
                break;
            }
        }
    }
    return result;
}

bool is_permutation_mod(const IntPolynomial& f, std::uint64_t m, std::uint64_t cap) {
    return check_permutation_mod(f, m, cap).bijective;
}

std::vector<std::uint64_t> roots_mod(const IntPolynomial& f, std::uint64_t p) {
    const ResiduePolynomial g(f, p);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
        if (g(x) == 0) roots.push_back(x);
    }
    return roots;
}

std::string_view to_string(VerdictMethod method) {
    switch (method) {
        case VerdictMethod::brute_force: return "brute_force";
        case VerdictMethod::noebauer: return "noebauer";
        case VerdictMethod::associated_formula: return "associated_formula";
    }
    return "unknown";
}

Verdict noebauer_mod_p2(const IntPolynomial& f, std::uint32_t p) {
    require_prime(p);
    const auto mod_p = check_permutation_mod(f, p);
    const auto roots = roots_mod(derivative(f), p);

    Verdict v;
    v.method = VerdictMethod::noebauer;
    v.perm_mod_p = mod_p.bijective;
    if (!roots.empty()) v.derivative_root = roots.front();
    v.perm_mod_p2 = v.perm_mod_p && roots.empty();
    v.low_discrepancy = v.perm_mod_p2;
    if (!mod_p.bijective) {
        v.missing_residue = MissingResidue{1, *mod_p.missing_residue};
        v.collision = Collision{1, mod_p.collision->first, mod_p.collision->second};
    } else if (!roots.empty()) {
        // f(r + p) = f(r) + p f'(r) = f(r) mod p^2
        v.collision = Collision{2, roots.front(), roots.front() + p};
    }
    return v;
}

Verdict classify_low_discrepancy(const IntPolynomial& f, std::uint32_t p, std::uint64_t cap) {
    require_prime(p);
    const std::uint64_t p2 = std::uint64_t{p} * p;
    if (p2 > cap) {
        throw EnumerationLimitError("enumeration too large: p^2 = " + std::to_string(p2) + " exceeds cap " +
                                    std::to_string(cap));
    }
    const auto mod_p = check_permutation_mod(f, p, cap);
    const auto mod_p2 = check_permutation_mod(f, p2, cap);
    const Verdict certificate = noebauer_mod_p2(f, p);

    Verdict v;
    v.method = VerdictMethod::brute_force;
    v.perm_mod_p = mod_p.bijective;
    v.perm_mod_p2 = mod_p2.bijective;
    v.low_discrepancy = v.perm_mod_p && v.perm_mod_p2;
    v.derivative_root = certificate.derivative_root;
    if (!mod_p.bijective) {
        v.missing_residue = MissingResidue{1, *mod_p.missing_residue};
        v.collision = Collision{1, mod_p.collision->first, mod_p.collision->second};
    } else if (!mod_p2.bijective) {
        v.missing_residue = MissingResidue{2, *mod_p2.missing_residue};
        v.collision = Collision{2, mod_p2.collision->first, mod_p2.collision->second};
    }

    if (certificate.perm_mod_p != v.perm_mod_p || certificate.perm_mod_p2 != v.perm_mod_p2) {
        throw InternalError("enumeration and derivative criterion disagree for f = " + render(f) +
                            ", p = " + std::to_string(p));
    }
    return v;
}

Verdict classify_via_associated(const IntPolynomial& f, std::uint32_t p) {
    const IntPolynomial g1 = associated_g1(f, p);
    const IntPolynomial g2 = associated_g2(f, p);
    const auto g1_check = check_permutation_mod(g1, p);
    const auto g2_roots = roots_mod(g2, p);

    Verdict v;
    v.method = VerdictMethod::associated_formula;
    v.perm_mod_p = g1_check.bijective;
    if (!g2_roots.empty()) v.derivative_root = g2_roots.front();
    v.perm_mod_p2 = v.perm_mod_p && g2_roots.empty();
    v.low_discrepancy = v.perm_mod_p2;
    if (!g1_check.bijective) {
        v.missing_residue = MissingResidue{1, *g1_check.missing_residue};
        v.collision = Collision{1, g1_check.collision->first, g1_check.collision->second};
    }
    return v;
}

std::vector<DivergenceEntry> divergence_scan(const DivergenceScanOptions& options) {
    const std::uint32_t p = options.p;
    require_prime(p);
    if (p < 3) {
        throw DomainError("associated polynomials need p >= 3");
    }
    if (options.coefficient_end <= options.coefficient_begin) {
        throw DomainError("empty coefficient range");
    }

    std::set<long long> residue_set;
    for (long long c = options.coefficient_begin; c < options.coefficient_end && residue_set.size() < p; ++c) {
        residue_set.insert(((c % p) + p) % p);
    }
    const std::vector<long long> residues(residue_set.begin(), residue_set.end());
    const std::uint64_t radix = residues.size();
    const unsigned length = options.max_degree + 1;

    std::uint64_t total = 1;
    for (unsigned i = 0; i < length; ++i) {
        if (total > options.cap / radix) {
            throw EnumerationLimitError("divergence scan exceeds cap of " + std::to_string(options.cap) +
                                        " polynomials");
        }
        total *= radix;
    }

    return detail::ordered_parallel_collect<DivergenceEntry>(
        total, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<DivergenceEntry> found;
            std::vector<BigInt> coeffs(length);
            for (std::uint64_t index = begin; index < end; ++index) {
                std::uint64_t rest = index;
                for (unsigned i = 0; i < length; ++i) {
                    coeffs[i] = static_cast<long>(residues[rest % radix]);
                    rest /= radix;
                }
                IntPolynomial f(coeffs);
                Verdict truth = classify_low_discrepancy(f, p, options.cap);
                Verdict formula = classify_via_associated(f, p);
                if (truth.low_discrepancy != formula.low_discrepancy) {
                    found.push_back(DivergenceEntry{f, associated_g1(f, p), associated_g2(f, p), truth, formula});
                }
            }
            return found;
        });
}

}  // namespace padisc
