#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into the
// library's algorithms; only the GMP number types are shared.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline unsigned long valuation(mpz_class x, unsigned long p) {
    unsigned long m = 0;
    while (x % p == 0) {
        x /= p;
        ++m;
    }
    return m;
}

inline mpz_class power(unsigned long p, unsigned long k) {
    mpz_class r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= p;
    return r;
}

inline mpz_class mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r = x % m;
    if (r < 0) r += m;
    return r;
}

// Coefficients ascending; plain evaluation, reduced once at the end.
inline mpz_class eval(const std::vector<mpz_class>& coeffs, const mpz_class& x) {
    mpz_class acc = 0;
    mpz_class xp = 1;
    for (const auto& c : coeffs) {
        acc += c * xp;
        xp *= x;
    }
    return acc;
}

inline bool is_permutation(const std::vector<mpz_class>& coeffs, unsigned long m) {
    std::set<mpz_class> seen;
    for (unsigned long x = 0; x < m; ++x) seen.insert(mod(eval(coeffs, x), m));
    return seen.size() == m;
}

inline std::vector<unsigned long> roots(const std::vector<mpz_class>& coeffs, unsigned long p) {
    std::vector<unsigned long> out;
    for (unsigned long x = 0; x < p; ++x) {
        if (mod(eval(coeffs, x), p) == 0) out.push_back(x);
    }
    return out;
}

// Every ball level up to one past the deepest pairwise congruence, every
// residue at that level, plus the limit c*/N of the exact-value terms.
inline mpq_class padic_discrepancy(const std::vector<mpz_class>& values, unsigned long p) {
    const std::size_t n = values.size();
    unsigned long deepest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (values[i] != values[j]) deepest = std::max(deepest, valuation(values[i] - values[j], p));
        }
    }
    const unsigned long last = deepest + 2;
    mpq_class best = 0;
    for (unsigned long k = 1; k <= last; ++k) {
        const mpz_class pk = power(p, k);
        const mpq_class measure(1, pk);
        for (mpz_class z = 0; z < pk; ++z) {
            std::size_t count = 0;
            for (const auto& v : values) count += mod(v - z, pk) == 0;
            mpq_class term = mpq_class(static_cast<unsigned long>(count), static_cast<unsigned long>(n)) - measure;
            term.canonicalize();
            best = std::max(best, mpq_class(abs(term)));
        }
    }
    std::map<mpz_class, std::size_t> multiplicity;
    for (const auto& v : values) ++multiplicity[v];
    std::size_t top = 0;
    for (const auto& [v, c] : multiplicity) top = std::max(top, c);
    mpq_class tail(static_cast<unsigned long>(top), static_cast<unsigned long>(n));
    tail.canonicalize();
    return std::max(best, tail);
}

// Every interval with endpoints in the points and {0, 1}, each endpoint open
// or closed. The half-open supremum is a limit of these.
inline mpq_class real_discrepancy(const std::vector<mpq_class>& points) {
    std::vector<mpq_class> grid(points);
    grid.push_back(0);
    grid.push_back(1);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const mpq_class n(static_cast<unsigned long>(points.size()));
    mpq_class best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            const mpq_class& a = grid[i];
            const mpq_class& b = grid[j];
            for (int closed_left = 0; closed_left < 2; ++closed_left) {
                for (int closed_right = 0; closed_right < 2; ++closed_right) {
                    if (a == b && !(closed_left && closed_right)) continue;
                    unsigned long count = 0;
                    for (const auto& x : points) {
                        const bool left = closed_left ? x >= a : x > a;
                        const bool right = closed_right ? x <= b : x < b;
                        count += left && right;
                    }
                    const mpq_class gap = abs(mpq_class(count) / n - (b - a));
                    best = std::max(best, gap);
                }
            }
        }
    }
    return best;
}

inline mpz_class pair_count(const std::vector<mpz_class>& values, const mpz_class& modulus) {
    mpz_class count = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (i != j && mod(values[i] - values[j], modulus) == 0) ++count;
        }
    }
    return count;
}

// Smallest k with p^-k <= s / N^(u/v): compare p^(kv) * s^v >= N^u, k counting up.
inline unsigned long threshold(const mpq_class& s, unsigned long n, unsigned long u, unsigned long v, unsigned long p) {
    mpq_class sv = 1;
    for (unsigned long i = 0; i < v; ++i) sv *= s;
    const mpz_class nu = power(n, u);
    for (unsigned long k = 0;; ++k) {
        if (mpq_class(power(p, k * v)) * sv >= mpq_class(nu)) return k;
    }
}

}  // namespace oracle
