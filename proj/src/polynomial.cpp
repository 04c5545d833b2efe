#include "padisc/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "padisc/error.hpp"
#include "padisc/padic.hpp"

namespace padisc {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, std::size_t exponent) {
    std::vector<BigInt> c(exponent + 1, BigInt(0));
    c[exponent] = coefficient;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) {
        throw DomainError("the zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

std::string render(const IntPolynomial& f) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = f.coefficients();
    for (std::size_t e = c.size(); e-- > 0;) {
        if (c[e] == 0) continue;
        const bool negative = c[e] < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt magnitude = abs(c[e]);
        if (e == 0 || magnitude != 1) {
            out += magnitude.get_str();
        }
        if (e >= 1) out += "x";
        if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
}

IntPolynomial reduce_coefficients(const IntPolynomial& f, const BigInt& m) {
    std::vector<BigInt> c;
    c.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) {
        c.push_back(floor_mod(a, m));
    }
    return IntPolynomial(std::move(c));
}

BigInt eval_mod(const IntPolynomial& f, const BigInt& x, const BigInt& m) {
    if (m <= 0) {
        throw DomainError("modulus must be positive");
    }
    const BigInt xr = floor_mod(x, m);
    BigInt acc = 0;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = floor_mod(acc * xr + *it, m);
    }
    return acc;
}

IntPolynomial derivative(const IntPolynomial& f) {
    const auto& c = f.coefficients();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<BigInt> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        d[k - 1] = c[k] * static_cast<unsigned long>(k);
    }
    return IntPolynomial(std::move(d));
}

namespace {

bool is_unit(const BigInt& a, const BigInt& m) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return g == 1;
}

}  // namespace

IntPolynomial affine_compose(const IntPolynomial& f, const AffineMap& outer, const AffineMap& inner, const BigInt& m) {
    if (m <= 0) {
        throw DomainError("modulus must be positive");
    }
    if (!is_unit(outer.scale, m) || !is_unit(inner.scale, m)) {
        throw DomainError("not an affine equivalence: scale is not a unit mod " + m.get_str());
    }
    const IntPolynomial linear(std::vector<BigInt>{inner.shift, inner.scale});
    IntPolynomial acc;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= linear;
        acc += IntPolynomial::constant(*it);
        acc = reduce_coefficients(acc, m);
    }
    acc = acc * IntPolynomial::constant(outer.scale) + IntPolynomial::constant(outer.shift);
    return reduce_coefficients(acc, m);
}

IntPolynomial reduce_functional(const IntPolynomial& f, std::uint32_t p) {
    require_prime(p);
    const auto& c = f.coefficients();
    std::vector<BigInt> folded(std::min<std::size_t>(c.size(), p), BigInt(0));
    for (std::size_t e = 0; e < c.size(); ++e) {
        std::size_t target = e;
        if (e >= p) {
            // x^e -> x^(e-(p-1)) until the exponent drops below p; stays >= 1.
            target = 1 + (e - 1) % (p - 1);
        }
        folded[target] += c[e];
    }
    return reduce_coefficients(IntPolynomial(std::move(folded)), p);
}

namespace {

void require_odd_prime(std::uint32_t p) {
    require_prime(p);
    if (p < 3) {
        throw DomainError("associated polynomials need p >= 3");
    }
}

}  // namespace

IntPolynomial associated_g1(const IntPolynomial& f, std::uint32_t p) {
    require_odd_prime(p);
    const std::size_t period = p - 1;
    std::vector<BigInt> g(period, BigInt(0));
    const auto& c = f.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
        g[e % period] += c[e];
    }
    return reduce_coefficients(IntPolynomial(std::move(g)), p);
}

IntPolynomial associated_g2(const IntPolynomial& f, std::uint32_t p) {
    require_odd_prime(p);
    const std::size_t period = p - 1;
    std::vector<BigInt> g(period, BigInt(0));
    const auto& c = f.coefficients();
    for (std::size_t k = 0; k < period; ++k) {
        for (std::size_t j = 0;; ++j) {
            const std::size_t index = k + 1 + j * period;
            if (index >= c.size()) break;
            // integer factor (k + 1 - j); terms with factor = 0 mod p are omitted
            const long long factor = static_cast<long long>(k) + 1 - static_cast<long long>(j);
            if (factor % static_cast<long long>(p) == 0) continue;
            g[k] += c[index] * static_cast<long>(factor);
        }
    }
    return reduce_coefficients(IntPolynomial(std::move(g)), p);
}

ResiduePolynomial::ResiduePolynomial(const IntPolynomial& f, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0 || modulus >= (std::uint64_t{1} << 63)) {
        throw DomainError("residue modulus out of range");
    }
    const BigInt m(static_cast<unsigned long>(modulus));
    coeffs_.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) {
        coeffs_.push_back(floor_mod(a, m).get_ui());
    }
}

ResiduePolynomial::ResiduePolynomial(std::vector<std::uint64_t> ascending, std::uint64_t modulus)
    : coeffs_(std::move(ascending)), modulus_(modulus) {
    if (modulus == 0 || modulus >= (std::uint64_t{1} << 63)) {
        throw DomainError("residue modulus out of range");
    }
    for (auto& a : coeffs_) a %= modulus_;
}

std::uint64_t ResiduePolynomial::operator()(std::uint64_t x) const noexcept {
    using u128 = unsigned __int128;
    x %= modulus_;
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * x + *it) % modulus_);
    }
    return acc;
}

}  // namespace padisc
