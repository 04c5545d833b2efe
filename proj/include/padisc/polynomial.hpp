#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padisc/bigint.hpp"

namespace padisc {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order (index i holds the coefficient
/// of x^i) with trailing zeros trimmed; the zero polynomial is empty.
/// No modular reduction happens at construction.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    static IntPolynomial monomial(const BigInt& coefficient, std::size_t exponent);
    static IntPolynomial constant(const BigInt& value) { return monomial(value, 0); }

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Zero beyond the degree.
    BigInt coefficient(std::size_t i) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    const BigInt& leading_coefficient() const;

    // Exact value at an integer point.
    BigInt operator()(const BigInt& x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

// Degree-descending human form, e.g. "x^5 + 2x^3 - x + 1"; "0" for zero.
// parse_poly(render(f)) == f.
std::string render(const IntPolynomial& f);

// Grammar (whitespace ignored):
//   poly    := term (('+'|'-') term)*
//   term    := sign? (integer | integer '*'? var | var)
//   var     := 'x' ('^' natural)?
// or a bracketed degree-descending coefficient list "[a_k, ..., a_1, a_0]".
// Throws ParseError carrying the offending position.
IntPolynomial parse_poly(std::string_view text);

// Coefficients reduced into [0, m).
IntPolynomial reduce_coefficients(const IntPolynomial& f, const BigInt& m);

// Horner evaluation with every intermediate reduced; result in [0, m).
BigInt eval_mod(const IntPolynomial& f, const BigInt& x, const BigInt& m);

IntPolynomial derivative(const IntPolynomial& f);

struct AffineMap {
    BigInt scale;
    BigInt shift;
};

// outer.scale * f(inner.scale * x + inner.shift) + outer.shift with coefficients
// reduced mod m. Both scales must be units mod m.
IntPolynomial affine_compose(const IntPolynomial& f, const AffineMap& outer, const AffineMap& inner, const BigInt& m);

// The polynomial of degree <= p-1, coefficients in [0, p), inducing the same
// map on Z/pZ as f. Obtained by rewriting x^e -> x^(e-(p-1)) for e >= p.
IntPolynomial reduce_functional(const IntPolynomial& f, std::uint32_t p);

// Degree <= p-2 polynomials obtained from f and f' by folding exponents
// with x^(p-1) = 1, coefficients in [0, p). They agree with f and f' on
// nonzero residues only; at x = 0 they can differ.
IntPolynomial associated_g1(const IntPolynomial& f, std::uint32_t p);
IntPolynomial associated_g2(const IntPolynomial& f, std::uint32_t p);

// f reduced into machine words for fast repeated evaluation modulo m < 2^63.
class ResiduePolynomial {
public:
    ResiduePolynomial(const IntPolynomial& f, std::uint64_t modulus);
    ResiduePolynomial(std::vector<std::uint64_t> ascending, std::uint64_t modulus);

    std::uint64_t operator()(std::uint64_t x) const noexcept;
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::span<const std::uint64_t> coefficients() const noexcept { return coeffs_; }

private:
    std::vector<std::uint64_t> coeffs_;
    std::uint64_t modulus_;
};

}  // namespace padisc
