#include "padisc/sequence.hpp"

#include "padisc/error.hpp"

namespace padisc {

SequenceSpec SequenceSpec::polynomial(IntPolynomial f, std::uint32_t p) {
    require_prime(p);
    SequenceSpec spec;
    spec.kind = Kind::polynomial;
    spec.p = p;
    spec.f = std::move(f);
    return spec;
}

SequenceSpec SequenceSpec::linear(PAdicApprox a, PAdicApprox b) {
    if (a.prime() != b.prime() || a.precision() != b.precision()) {
        throw PrecisionError("linear sequence parameters must share p and precision K");
    }
    SequenceSpec spec;
    spec.kind = Kind::linear;
    spec.p = a.prime();
    spec.a = std::move(a);
    spec.b = std::move(b);
    return spec;
}

std::optional<std::size_t> SequenceSpec::precision() const {
    if (kind == Kind::linear) return a->precision();
    return std::nullopt;
}

std::vector<BigInt> poly_sequence(const IntPolynomial& f, std::size_t count) {
    if (count == 0) {
        throw DomainError("sequence length N must be at least 1");
    }
    std::vector<BigInt> values;
    values.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        values.push_back(f(BigInt(static_cast<unsigned long>(n))));
    }
    return values;
}

std::vector<PAdicApprox> linear_sequence(const PAdicApprox& a, const PAdicApprox& b, std::size_t count) {
    if (count == 0) {
        throw DomainError("sequence length N must be at least 1");
    }
    if (a.prime() != b.prime() || a.precision() != b.precision()) {
        throw PrecisionError("linear sequence parameters must share p and precision K");
    }
    const BigInt modulus = a.modulus();
    const BigInt step = a.residue();
    BigInt x = b.residue();
    std::vector<PAdicApprox> values;
    values.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        x = floor_mod(x + step, modulus);
        values.push_back(digits_of(x, a.prime(), a.precision()));
    }
    return values;
}

std::vector<BigInt> sequence_values(const SequenceSpec& spec, std::size_t count) {
    if (spec.kind == SequenceSpec::Kind::polynomial) {
        return poly_sequence(spec.f, count);
    }
    std::vector<BigInt> values;
    values.reserve(count);
    for (const auto& x : linear_sequence(*spec.a, *spec.b, count)) {
        values.push_back(x.residue());
    }
    return values;
}

}  // namespace padisc
