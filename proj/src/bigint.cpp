#include "padisc/bigint.hpp"

#include <cctype>
#include <limits>

#include "padisc/error.hpp"

namespace padisc {

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw DomainError("zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

BigInt ipow(std::uint64_t base, unsigned long exponent) {
    return ipow(BigInt(static_cast<unsigned long>(base)), exponent);
}

BigInt floor_mod(const BigInt& x, const BigInt& m) {
    if (m <= 0) {
        throw DomainError("modulus must be positive");
    }
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool fits_u64(const BigInt& x) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return x >= 0 && x.fits_ulong_p();
}

std::uint64_t to_u64(const BigInt& x) {
    if (!fits_u64(x)) {
        throw DomainError("integer " + x.get_str() + " does not fit in 64 bits");
    }
    return x.get_ui();
}

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("expected an integer", i);
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", j);
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text));
    }
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    return make_rational(num, den);
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace padisc
