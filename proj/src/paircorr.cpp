#include "padisc/paircorr.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "padisc/error.hpp"

namespace padisc {

namespace {

void require_alpha(const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) {
        throw DomainError("alpha must lie in (0, 1]");
    }
}

BigInt pairs_from_classes(std::vector<BigInt> residues) {
    std::sort(residues.begin(), residues.end());
    BigInt total = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= residues.size(); ++i) {
        if (i < residues.size() && residues[i] == residues[i - 1]) {
            ++run;
            continue;
        }
        total += BigInt(static_cast<unsigned long>(run)) * static_cast<unsigned long>(run - 1);
        run = 1;
    }
    return total;
}

}  // namespace

unsigned long threshold_level(const Rational& s, std::size_t n, const Rational& alpha, std::uint32_t p) {
    require_prime(p);
    require_alpha(alpha);
    if (s <= 0) {
        throw DomainError("s must be positive: the ball of radius 0 has measure zero");
    }
    if (n == 0) {
        throw DomainError("N must be at least 1");
    }
    // p^-k <= s N^-(u/v)  <=>  N^u * den(s)^v <= num(s)^v * p^(k v)
    const unsigned long u = alpha.get_num().get_ui();
    const unsigned long v = alpha.get_den().get_ui();
    const BigInt lhs = ipow(BigInt(static_cast<unsigned long>(n)), u) * ipow(s.get_den(), v);
    BigInt rhs = ipow(s.get_num(), v);
    const BigInt step = ipow(p, v);
    unsigned long k = 0;
    while (lhs > rhs) {
        rhs *= step;
        ++k;
    }
    return k;
}

BigInt pair_count(std::span<const BigInt> values, std::uint32_t p, unsigned long k) {
    require_prime(p);
    const BigInt modulus = ipow(p, k);
    std::vector<BigInt> residues;
    residues.reserve(values.size());
    for (const auto& x : values) residues.push_back(floor_mod(x, modulus));
    return pairs_from_classes(std::move(residues));
}

BigInt pair_count(std::span<const PAdicApprox> values, unsigned long k) {
    if (values.empty()) return 0;
    const std::uint32_t p = values.front().prime();
    std::vector<BigInt> residues;
    residues.reserve(values.size());
    for (const auto& x : values) {
        if (x.prime() != p) {
            throw DomainError("points must share the prime p");
        }
        if (k > x.precision()) {
            throw PrecisionError("insufficient precision: level " + std::to_string(k) + " exceeds K = " +
                                 std::to_string(x.precision()));
        }
        residues.push_back(floor_mod(x.residue(), ipow(p, k)));
    }
    return pairs_from_classes(std::move(residues));
}

Rational f_statistic(const PairCorrInput& input) {
    const std::size_t n = input.values.size();
    const unsigned long k = threshold_level(input.s, n, input.alpha, input.p);
    const BigInt pairs = pair_count(input.values, input.p, k);
    const BigInt big_n(static_cast<unsigned long>(n));
    return make_rational(ipow(input.p, k) * pairs, big_n * big_n);
}

std::vector<PairCorrRow> ppc_sweep(const SequenceSpec& spec, const Rational& alpha, std::span<const Rational> s_list,
                                   std::span<const std::size_t> n_schedule) {
    if (n_schedule.empty() || s_list.empty()) {
        throw DomainError("pair-correlation sweep needs a nonempty N schedule and s list");
    }
    require_alpha(alpha);
    const std::size_t longest = *std::max_element(n_schedule.begin(), n_schedule.end());
    const std::vector<BigInt> all = sequence_values(spec, longest);

    std::vector<PairCorrRow> rows;
    for (const std::size_t n : n_schedule) {
        const std::span<const BigInt> prefix(all.data(), n);
        for (const auto& s : s_list) {
            const unsigned long k = threshold_level(s, n, alpha, spec.p);
            if (spec.kind == SequenceSpec::Kind::linear && k > *spec.precision()) {
                throw PrecisionError("insufficient precision: level " + std::to_string(k) + " exceeds K = " +
                                     std::to_string(*spec.precision()));
            }
            PairCorrRow row{n, s, k, pair_count(prefix, spec.p, k), 0};
            const BigInt big_n(static_cast<unsigned long>(n));
            row.value = make_rational(ipow(spec.p, k) * row.pairs, big_n * big_n);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace padisc
