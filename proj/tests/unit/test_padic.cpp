#include "doctest.h"

#include "../oracles.hpp"
#include "padisc/error.hpp"
#include "padisc/padic.hpp"

using namespace padisc;

namespace {
std::vector<std::uint32_t> digit_vector(const PAdicApprox& x) { return {x.digits().begin(), x.digits().end()}; }
}  // namespace

TEST_CASE("valuation") {
    CHECK(valuation(18, 3) == 2);
    CHECK(valuation(7, 3) == 0);
    CHECK(valuation(243, 3) == 5);
    CHECK(valuation(-50, 5) == 2);
    CHECK(valuation(ipow(BigInt(7), 40) * 3, 7) == 40);
    CHECK_THROWS_WITH_AS(valuation(0, 3), "valuation of zero is infinite", DomainError);
    CHECK_THROWS_AS(valuation(12, 4), DomainError);
    for (long x = 1; x <= 2000; ++x) CHECK(valuation(x, 3) == oracle::valuation(x, 3));
}

TEST_CASE("abs_p") {
    CHECK(abs_p(18, 3) == Rational(1, 9));
    CHECK(abs_p(0, 5) == 0);
    CHECK(abs_p(10, 5) == Rational(1, 5));
    CHECK(abs_p(7, 3) == 1);
}

TEST_CASE("abs_p is an ultrametric") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (long x = -1000; x <= 1000; x += 7) {
            for (long y = -1000; y <= 1000; y += 11) {
                CHECK(abs_p(x + y, p) <= std::max(abs_p(x, p), abs_p(y, p)));
            }
        }
    }
}

TEST_CASE("ball_level") {
    CHECK(ball_level(Rational(1, 3), 3) == 1);
    CHECK(ball_level(Rational(1, 4), 3) == 2);
    CHECK(ball_level(Rational(5), 7) == 0);
    CHECK(ball_level(Rational(1), 7) == 0);
    for (unsigned long k = 0; k <= 20; ++k) {
        CHECK(ball_level(make_rational(1, ipow(BigInt(3), k)), 3) == k);
        CHECK(ball_level(make_rational(1, ipow(BigInt(2), k)), 2) == k);
    }
    CHECK_THROWS_WITH_AS(ball_level(Rational(0), 3), doctest::Contains("empty/degenerate ball"), DomainError);
    CHECK_THROWS_AS(ball_level(Rational(-1, 2), 3), DomainError);
}

TEST_CASE("digits_of") {
    CHECK(digit_vector(digits_of(7, 3, 3)) == std::vector<std::uint32_t>{1, 2, 0});
    CHECK(digit_vector(digits_of(0, 5, 4)) == std::vector<std::uint32_t>{0, 0, 0, 0});
    CHECK(digit_vector(digits_of(243, 3, 5)) == std::vector<std::uint32_t>{0, 0, 0, 0, 0});
    CHECK(digit_vector(digits_of(-1, 3, 3)) == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(digits_of(123456, 7, 9).residue() == 123456);
    CHECK(digits_of(-5, 2, 8).residue() == 251);
}

TEST_CASE("PAdicApprox construction and access") {
    CHECK_THROWS_AS(PAdicApprox(4, {1}), DomainError);
    CHECK_THROWS_AS(PAdicApprox(3, {}), PrecisionError);
    CHECK_THROWS_AS(PAdicApprox(3, {1, 3}), DomainError);
    const PAdicApprox x(3, {1, 2});
    CHECK(x.precision() == 2);
    CHECK(x.residue() == 7);
    CHECK(x.modulus() == 9);
    CHECK(x.digit(1) == 2);
    CHECK_THROWS_AS(x.digit(2), PrecisionError);
    CHECK(x == PAdicApprox(3, {1, 2}));
    CHECK_FALSE(x == PAdicApprox(3, {1, 1}));
    CHECK_THROWS_AS((void)(x == PAdicApprox(3, {1, 2, 0})), Error);
    CHECK_THROWS_AS((void)(x == PAdicApprox(5, {1, 2})), Error);
    const PAdicApprox y = PAdicApprox::affine(4, PAdicApprox(3, {2, 0}), PAdicApprox(3, {1, 0}));
    CHECK(y.residue() == 0);  // 4*2 + 1 = 9
}

TEST_CASE("monna_map") {
    CHECK(monna_map(PAdicApprox(3, {1, 2})) == Rational(5, 9));
    CHECK(monna_map(PAdicApprox(5, {0, 0, 0})) == 0);
    CHECK(monna_map(PAdicApprox(3, {2})) == Rational(2, 3));
    CHECK(monna_map(PAdicApprox(2, {1, 1, 1, 1})) == Rational(15, 16));
}

TEST_CASE("monna_map is injective on equal-length digit vectors") {
    for (std::size_t k = 1; k <= 5; ++k) {
        std::set<Rational> images;
        const long count = oracle::power(3, k).get_si();
        for (long x = 0; x < count; ++x) {
            const Rational y = monna_map(digits_of(x, 3, k));
            CHECK(y >= 0);
            CHECK(y < 1);
            images.insert(y);
        }
        CHECK(images.size() == static_cast<std::size_t>(count));
    }
}

TEST_CASE("congruence, shared digits and Monna closeness agree") {
    const std::uint32_t p = 3;
    const std::size_t K = 6;
    for (long x = 0; x < 200; x += 3) {
        for (long y = 0; y < 200; y += 5) {
            const PAdicApprox dx = digits_of(x, p, K);
            const PAdicApprox dy = digits_of(y, p, K);
            for (std::size_t k = 1; k <= K; ++k) {
                const bool congruent = (x - y) % oracle::power(p, k).get_si() == 0;
                const bool prefix = std::equal(dx.digits().begin(), dx.digits().begin() + k, dy.digits().begin());
                const Rational gap = abs(monna_map(dx) - monna_map(dy));
                CHECK(congruent == prefix);
                if (congruent) CHECK(gap < make_rational(1, ipow(BigInt(p), k)));
            }
        }
    }
}

TEST_CASE("bigint helpers") {
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(fraction_string(make_rational(4, 2)) == "2/1");
    CHECK(fraction_string(Rational(0)) == "0/1");
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("-5") == -5);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1 /2"), ParseError);
    CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(is_prime(2));
    CHECK(is_prime(1'000'003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(require_prime(1), DomainError);
}
