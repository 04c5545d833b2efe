#include "padisc/padic.hpp"

#include <string>

#include "padisc/error.hpp"

namespace padisc {

void require_prime(std::uint64_t p) {
    if (p < 2) {
        throw DomainError("p = " + std::to_string(p) + " is not a prime");
    }
    if (p < prime_check_bound && !is_prime(p)) {
        throw DomainError("p = " + std::to_string(p) + " is not a prime");
    }
}

PAdicApprox::PAdicApprox(std::uint32_t p, std::vector<std::uint32_t> digits)
    : p_(p), digits_(std::move(digits)) {
    require_prime(p_);
    if (digits_.empty()) {
        throw PrecisionError("p-adic approximation needs precision K >= 1");
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] >= p_) {
            throw DomainError("digit " + std::to_string(digits_[i]) + " at index " + std::to_string(i) +
                              " is not below p = " + std::to_string(p_));
        }
    }
}

std::uint32_t PAdicApprox::digit(std::size_t i) const {
    if (i >= digits_.size()) {
        throw PrecisionError("digit " + std::to_string(i) + " requested from a value known to precision " +
                             std::to_string(digits_.size()));
    }
    return digits_[i];
}

BigInt PAdicApprox::residue() const {
    BigInt r = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        r *= p_;
        r += *it;
    }
    return r;
}

BigInt PAdicApprox::modulus() const { return ipow(p_, digits_.size()); }

PAdicApprox PAdicApprox::affine(const BigInt& n, const PAdicApprox& a, const PAdicApprox& b) {
    if (a.p_ != b.p_ || a.precision() != b.precision()) {
        throw PrecisionError("linear sequence parameters must share p and precision K");
    }
    return digits_of(n * a.residue() + b.residue(), a.p_, a.precision());
}

bool operator==(const PAdicApprox& lhs, const PAdicApprox& rhs) {
    if (lhs.p_ != rhs.p_) {
        throw DomainError("comparing p-adic values for different primes");
    }
    if (lhs.precision() != rhs.precision()) {
        throw PrecisionError("comparing p-adic values of precision " + std::to_string(lhs.precision()) + " and " +
                             std::to_string(rhs.precision()));
    }
    return lhs.digits_ == rhs.digits_;
}

unsigned long valuation(const BigInt& x, std::uint32_t p) {
    require_prime(p);
    if (x == 0) {
        throw DomainError("valuation of zero is infinite");
    }
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), BigInt(p).get_mpz_t());
}

Rational abs_p(const BigInt& x, std::uint32_t p) {
    require_prime(p);
    if (x == 0) {
        return Rational(0);
    }
    return make_rational(1, ipow(p, valuation(x, p)));
}

unsigned long ball_level(const Rational& radius, std::uint32_t p) {
    require_prime(p);
    if (radius <= 0) {
        throw DomainError("empty/degenerate ball: radius must be positive");
    }
    // p^-k <= num/den  <=>  den <= num * p^k
    const BigInt& num = radius.get_num();
    const BigInt& den = radius.get_den();
    unsigned long k = 0;
    BigInt scaled = num;
    while (scaled < den) {
        scaled *= p;
        ++k;
    }
    return k;
}

PAdicApprox digits_of(const BigInt& x, std::uint32_t p, std::size_t precision) {
    require_prime(p);
    if (precision == 0) {
        throw PrecisionError("precision K must be at least 1");
    }
    BigInt rest = floor_mod(x, ipow(p, precision));
    std::vector<std::uint32_t> digits(precision, 0);
    BigInt digit;
    for (std::size_t i = 0; i < precision && rest != 0; ++i) {
        mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p);
        digits[i] = static_cast<std::uint32_t>(digit.get_ui());
    }
    return PAdicApprox(p, std::move(digits));
}

Rational monna_map(const PAdicApprox& x) {
    // sum d_i p^(K-1-i) / p^K
    BigInt numerator = 0;
    for (const auto d : x.digits()) {
        numerator *= x.prime();
        numerator += d;
    }
    return make_rational(numerator, x.modulus());
}

}  // namespace padisc
