#include "padisc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "padisc/error.hpp"

namespace padisc {

namespace {

// Points sorted by their little-endian digit strings, so that at every level
// k the residue classes mod p^k are contiguous runs.
class DigitTrie {
public:
    DigitTrie(std::span<const BigInt> values, std::uint32_t p) : p_(p), n_(values.size()) {
        // p^depth > 2 max|x| keeps distinct values apart mod p^depth; one more
        // digit lets level k_sep + 1 be read off.
        BigInt bound = 0;
        for (const auto& x : values) bound = std::max(bound, BigInt(abs(x)));
        bound = 2 * bound;
        std::size_t depth = 1;
        BigInt power = p;
        while (power <= bound) {
            power *= p;
            ++depth;
        }
        width_ = depth + 1;
        powers_.push_back(1);
        for (std::size_t k = 1; k <= width_; ++k) powers_.push_back(powers_.back() * p);

        digits_.assign(n_ * width_, 0);
        const BigInt& modulus = powers_[width_];
        BigInt rest;
        for (std::size_t i = 0; i < n_; ++i) {
            rest = floor_mod(values[i], modulus);
            std::uint32_t* row = &digits_[i * width_];
            if (fits_u64(rest)) {
                std::uint64_t r = rest.get_ui();
                for (std::size_t d = 0; d < width_ && r != 0; ++d) {
                    row[d] = static_cast<std::uint32_t>(r % p);
                    r /= p;
                }
            } else {
                for (std::size_t d = 0; d < width_ && rest != 0; ++d) {
                    row[d] = static_cast<std::uint32_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p));
                }
            }
        }

        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
            const std::uint32_t* ra = &digits_[a * width_];
            const std::uint32_t* rb = &digits_[b * width_];
            return std::lexicographical_compare(ra, ra + width_, rb, rb + width_);
        });

        // lcp_[i]: common digit prefix of order_[i-1] and order_[i]; width_ means equal.
        lcp_.assign(n_, 0);
        for (std::size_t i = 1; i < n_; ++i) {
            const std::uint32_t* ra = &digits_[order_[i - 1] * width_];
            const std::uint32_t* rb = &digits_[order_[i] * width_];
            std::size_t l = 0;
            while (l < width_ && ra[l] == rb[l]) ++l;
            lcp_[i] = l;
        }
    }

    std::size_t size() const { return n_; }
    std::size_t width() const { return width_; }
    const BigInt& power(std::size_t k) const { return powers_.at(k); }

    unsigned separation_depth() const {
        std::size_t deepest = 0;
        for (std::size_t i = 1; i < n_; ++i) {
            if (lcp_[i] < width_) deepest = std::max(deepest, lcp_[i]);
        }
        return static_cast<unsigned>(deepest + 1);
    }

    std::size_t max_multiplicity() const {
        std::size_t best = n_ == 0 ? 0 : 1, run = 1;
        for (std::size_t i = 1; i < n_; ++i) {
            run = lcp_[i] >= width_ ? run + 1 : 1;
            best = std::max(best, run);
        }
        return best;
    }

    // Calls visit(first_sorted_position, count) for each class mod p^k.
    template <typename Visit>
    void for_each_class(std::size_t k, Visit visit) const {
        std::size_t start = 0;
        for (std::size_t i = 1; i <= n_; ++i) {
            if (i == n_ || lcp_[i] < k) {
                visit(start, i - start);
                start = i;
            }
        }
    }

    BigInt residue(std::size_t sorted_position, std::size_t k) const {
        const std::uint32_t* row = &digits_[order_[sorted_position] * width_];
        BigInt r = 0;
        for (std::size_t d = k; d-- > 0;) {
            r *= p_;
            r += row[d];
        }
        return r;
    }

private:
    std::uint32_t p_;
    std::size_t n_;
    std::size_t width_ = 0;
    std::vector<BigInt> powers_;
    std::vector<std::uint32_t> digits_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> lcp_;
};

struct LevelSummary {
    std::size_t classes = 0;
    std::size_t min_count = 0;
    std::size_t max_count = 0;
};

DiscrepancyResult discrepancy_from_trie(const DigitTrie& trie, std::optional<std::size_t> precision) {
    const std::size_t n = trie.size();
    const BigInt big_n(static_cast<unsigned long>(n));
    const unsigned k_sep = trie.separation_depth();
    if (precision && k_sep + 1 > *precision) {
        throw PrecisionError("insufficient precision K = " + std::to_string(*precision) + ": separation depth " +
                             std::to_string(k_sep) + " needs K >= " + std::to_string(k_sep + 1));
    }
    const unsigned last_level = k_sep + 1;

    Rational best = -1;
    unsigned best_level = 0;
    for (unsigned k = 1; k <= last_level; ++k) {
        LevelSummary s;
        s.min_count = n;
        trie.for_each_class(k, [&](std::size_t, std::size_t count) {
            ++s.classes;
            s.min_count = std::min(s.min_count, count);
            s.max_count = std::max(s.max_count, count);
        });
        const BigInt& pk = trie.power(k);
        // |c/N - p^-k| is extremal at the largest or smallest occupied count
        const BigInt spread = std::max(abs(BigInt(s.max_count * pk - big_n)), abs(BigInt(s.min_count * pk - big_n)));
        Rational level_value = make_rational(spread, big_n * pk);
        if (BigInt(static_cast<unsigned long>(s.classes)) < pk) {
            level_value = std::max(level_value, Rational(make_rational(1, pk)));
        }
        if (level_value > best) {
            best = level_value;
            best_level = k;
        }
    }

    DiscrepancyResult result;
    result.separation_depth = k_sep;
    const Rational tail = make_rational(static_cast<unsigned long>(trie.max_multiplicity()), big_n);
    if (tail > best) {
        result.value = tail;
    } else {
        result.value = best;
        result.witness_level = best_level;
        // smallest residue among the balls at best_level attaining the value
        const BigInt& pk = trie.power(best_level);
        const BigInt target = best.get_num() * (big_n * pk / best.get_den());
        std::vector<BigInt> occupied;
        std::optional<BigInt> witness;
        trie.for_each_class(best_level, [&](std::size_t first, std::size_t count) {
            BigInt z = trie.residue(first, best_level);
            if (abs(BigInt(count * pk - big_n)) == target && (!witness || z < *witness)) {
                witness = z;
            }
            occupied.push_back(std::move(z));
        });
        if (Rational(make_rational(1, pk)) == best && BigInt(static_cast<unsigned long>(occupied.size())) < pk) {
            std::sort(occupied.begin(), occupied.end());
            BigInt gap = 0;
            for (const auto& z : occupied) {
                if (z != gap) break;
                ++gap;
            }
            if (!witness || gap < *witness) witness = gap;
        }
        result.witness_residue = witness;
    }

    if (result.value < make_rational(1, big_n) || result.value > 1) {
        throw InternalError("p-adic discrepancy " + fraction_string(result.value) + " outside [1/N, 1]");
    }
    return result;
}

}  // namespace

unsigned separation_depth(std::span<const BigInt> values, std::uint32_t p) {
    require_prime(p);
    if (values.size() <= 1) return 1;
    return DigitTrie(values, p).separation_depth();
}

DiscrepancyResult padic_discrepancy(std::span<const BigInt> values, std::uint32_t p) {
    require_prime(p);
    if (values.empty()) {
        throw DomainError("discrepancy needs at least one point");
    }
    return discrepancy_from_trie(DigitTrie(values, p), std::nullopt);
}

DiscrepancyResult padic_discrepancy_truncated(std::span<const PAdicApprox> values) {
    if (values.empty()) {
        throw DomainError("discrepancy needs at least one point");
    }
    const std::uint32_t p = values.front().prime();
    const std::size_t precision = values.front().precision();
    std::vector<BigInt> residues;
    residues.reserve(values.size());
    for (const auto& x : values) {
        if (x.prime() != p || x.precision() != precision) {
            throw PrecisionError("points must share p and precision K");
        }
        residues.push_back(x.residue());
    }
    return discrepancy_from_trie(DigitTrie(residues, p), precision);
}

Rational real_extreme_discrepancy(std::span<const Rational> points) {
    if (points.empty()) {
        throw DomainError("discrepancy needs at least one point");
    }
    std::vector<Rational> sorted(points.begin(), points.end());
    for (const auto& x : sorted) {
        if (x < 0 || x >= 1) {
            throw DomainError("point " + fraction_string(x) + " outside [0, 1)");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<unsigned long>(sorted.size());
    // 1/N + max(i/N - x_(i)) - min(i/N - x_(i))
    Rational hi = make_rational(1, n) - sorted[0];
    Rational lo = hi;
    for (unsigned long i = 1; i < n; ++i) {
        const Rational gap = make_rational(i + 1, n) - sorted[i];
        hi = std::max(hi, gap);
        lo = std::min(lo, gap);
    }
    return Rational(make_rational(1, n) + hi - lo);
}

std::string_view to_string(BoundOutcome outcome) {
    switch (outcome) {
        case BoundOutcome::holds: return "holds";
        case BoundOutcome::fails: return "fails";
        case BoundOutcome::indeterminate: return "indeterminate";
    }
    return "unknown";
}

MeijerCheck meijer_bound_check(const Rational& delta, const Rational& d, std::uint32_t p) {
    require_prime(p);
    if (delta <= 0 || delta > 1 || d <= 0 || d > 1) {
        throw DomainError("discrepancies must lie in (0, 1]");
    }
    MeijerCheck check;
    check.lower_holds = delta < d;

    const double dp = static_cast<double>(p);
    const double delta_f = to_double(delta);
    check.upper_bound = delta_f * (2.0 + 2.0 * (dp - 1.0) / std::log(dp) * std::log(1.0 / delta_f));
    const double slack = check.upper_bound - to_double(d);
    if (std::abs(slack) <= meijer_tolerance) {
        check.upper = BoundOutcome::indeterminate;
    } else {
        check.upper = slack > 0 ? BoundOutcome::holds : BoundOutcome::fails;
    }

    if (!check.lower_holds || check.upper == BoundOutcome::fails) {
        check.outcome = BoundOutcome::fails;
    } else {
        check.outcome = check.upper;
    }
    return check;
}

}  // namespace padisc
