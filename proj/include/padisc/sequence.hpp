#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "padisc/bigint.hpp"
#include "padisc/padic.hpp"
#include "padisc/polynomial.hpp"

namespace padisc {

// Indexing starts at n = 1 throughout.
struct SequenceSpec {
    enum class Kind { polynomial, linear };

    Kind kind = Kind::polynomial;
    std::uint32_t p = 3;
    IntPolynomial f;                // polynomial kind
    std::optional<PAdicApprox> a;   // linear kind: x_n = n a + b mod p^K
    std::optional<PAdicApprox> b;

    static SequenceSpec polynomial(IntPolynomial f, std::uint32_t p);
    static SequenceSpec linear(PAdicApprox a, PAdicApprox b);

    // K of the linear parameters; nullopt for polynomial sequences.
    std::optional<std::size_t> precision() const;
};

// Exact f(1), ..., f(N), no modular reduction.
std::vector<BigInt> poly_sequence(const IntPolynomial& f, std::size_t count);

// n a + b mod p^K for n = 1..N.
std::vector<PAdicApprox> linear_sequence(const PAdicApprox& a, const PAdicApprox& b, std::size_t count);

// First N terms as integers: exact values for polynomial sequences, residues
// in [0, p^K) for linear ones.
std::vector<BigInt> sequence_values(const SequenceSpec& spec, std::size_t count);

}  // namespace padisc
