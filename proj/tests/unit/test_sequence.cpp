#include "doctest.h"

#include <random>
#include <set>

#include "padisc/error.hpp"
#include "padisc/permcheck.hpp"
#include "padisc/sequence.hpp"

using namespace padisc;

namespace {
std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("poly_sequence") {
    CHECK(poly_sequence(parse_poly("x^3+x"), 3) == ints({2, 10, 30}));
    CHECK(poly_sequence(parse_poly("x"), 4) == ints({1, 2, 3, 4}));
    CHECK(poly_sequence(parse_poly("x^3-2x"), 5) == ints({-1, 4, 21, 56, 115}));
    CHECK(poly_sequence(parse_poly("x^40"), 2)[1] == ipow(BigInt(2), 40));
}

TEST_CASE("linear_sequence") {
    auto residues = [](const std::vector<PAdicApprox>& xs) {
        std::vector<BigInt> out;
        for (const auto& x : xs) out.push_back(x.residue());
        return out;
    };
    CHECK(residues(linear_sequence(digits_of(1, 3, 4), digits_of(0, 3, 4), 3)) == ints({1, 2, 3}));
    CHECK(residues(linear_sequence(digits_of(2, 3, 2), digits_of(1, 3, 2), 4)) == ints({3, 5, 7, 0}));
    CHECK(residues(linear_sequence(digits_of(3, 3, 3), digits_of(0, 3, 3), 3)) == ints({3, 6, 9}));
    CHECK(linear_sequence(digits_of(1, 3, 4), digits_of(0, 3, 4), 3).front().precision() == 4);
    CHECK_THROWS_AS(linear_sequence(digits_of(1, 3, 4), digits_of(0, 3, 3), 3), Error);
    CHECK_THROWS_AS(linear_sequence(digits_of(1, 3, 4), digits_of(0, 5, 4), 3), Error);
}

TEST_CASE("sequence_values") {
    CHECK(sequence_values(SequenceSpec::polynomial(parse_poly("x^2"), 3), 3) == ints({1, 4, 9}));
    const auto spec = SequenceSpec::linear(digits_of(2, 3, 2), digits_of(1, 3, 2));
    CHECK(spec.precision() == 2u);
    CHECK(sequence_values(spec, 4) == ints({3, 5, 7, 0}));
    CHECK_FALSE(SequenceSpec::polynomial(parse_poly("x"), 5).precision().has_value());
}

TEST_CASE("periodicity f(n + p^k) = f(n) mod p^k") {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<BigInt> c(rng() % 7 + 1);
            for (auto& a : c) a = static_cast<long>(rng() % 41) - 20;
            const IntPolynomial f(c);
            for (unsigned k = 1; k <= 4; ++k) {
                const long pk = ipow(BigInt(p), k).get_si();
                const auto xs = poly_sequence(f, 2 * pk);
                for (long n = 0; n < pk; ++n) CHECK(floor_mod(xs[n + pk] - xs[n], pk) == 0);
            }
        }
    }
}

TEST_CASE("low-discrepancy polynomials take distinct values mod p^k on N <= p^k terms") {
    for (const auto& [text, p] : std::vector<std::pair<const char*, std::uint32_t>>{
             {"x^3+x", 3}, {"x^5+4x^3+4x", 5}, {"x^6+2x", 11}}) {
        const IntPolynomial f = parse_poly(text);
        REQUIRE(classify_low_discrepancy(f, p).low_discrepancy);
        for (unsigned k = 1; k <= 3; ++k) {
            const BigInt pk = ipow(BigInt(p), k);
            const auto xs = poly_sequence(f, pk.get_ui());
            std::set<BigInt> residues;
            for (const auto& x : xs) residues.insert(floor_mod(x, pk));
            CHECK(residues.size() == xs.size());
        }
    }
}
