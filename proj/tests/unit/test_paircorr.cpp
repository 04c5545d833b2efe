#include "doctest.h"

#include <random>

#include "../oracles.hpp"
#include "padisc/error.hpp"
#include "padisc/paircorr.hpp"

using namespace padisc;

namespace {
std::vector<BigInt> range(long from, long to) {
    std::vector<BigInt> out;
    for (long x = from; x <= to; ++x) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("threshold_level") {
    CHECK(threshold_level(1, 6561, Rational(1, 2), 3) == 4);
    CHECK(threshold_level(3, 9, 1, 3) == 1);
    CHECK(threshold_level(5, 2, 1, 3) == 0);
    CHECK_THROWS_AS(threshold_level(0, 9, 1, 3), DomainError);
    CHECK_THROWS_AS(threshold_level(-1, 9, 1, 3), DomainError);
    CHECK_THROWS_AS(threshold_level(1, 9, 0, 3), DomainError);
    CHECK_THROWS_AS(threshold_level(1, 9, Rational(3, 2), 3), DomainError);
    CHECK_THROWS_AS(threshold_level(1, 0, 1, 3), DomainError);
}

TEST_CASE("threshold_level matches the counting oracle and is monotone in s") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned long v = rng() % 4 + 1;
        const unsigned long u = rng() % v + 1;
        const std::size_t n = rng() % 5000 + 1;
        const std::uint32_t p = trial % 2 ? 3 : 5;
        const Rational s = make_rational(static_cast<long>(rng() % 50 + 1), static_cast<long>(rng() % 50 + 1));
        CHECK(threshold_level(s, n, make_rational(u, v), p) == oracle::threshold(s, n, u, v, p));
        CHECK(threshold_level(s * 2, n, make_rational(u, v), p) <= threshold_level(s, n, make_rational(u, v), p));
    }
}

TEST_CASE("pair_count") {
    CHECK(pair_count(range(1, 9), 3, 1) == 18);
    CHECK(pair_count(range(1, 9), 3, 3) == 0);
    CHECK(pair_count(std::vector<BigInt>{5, 5}, 7, 2) == 2);
    CHECK(pair_count(range(1, 5), 3, 0) == 20);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigInt> xs(rng() % 200 + 1);
        for (auto& x : xs) x = static_cast<long>(rng() % 2000) - 1000;
        const unsigned long k = rng() % 5;
        const BigInt count = pair_count(xs, 3, k);
        CHECK(count == oracle::pair_count(xs, oracle::power(3, k)));
        CHECK(count % 2 == 0);
    }
}

TEST_CASE("pair_count on truncated points") {
    std::vector<PAdicApprox> xs;
    for (long x = 1; x <= 9; ++x) xs.push_back(digits_of(x, 3, 2));
    CHECK(pair_count(xs, 1) == 18);
    CHECK(pair_count(xs, 2) == 0);
    CHECK_THROWS_WITH_AS(pair_count(xs, 3), doctest::Contains("insufficient precision"), PrecisionError);
}

TEST_CASE("f_statistic") {
    CHECK(f_statistic({range(1, 6561), 3, Rational(1, 2), 1}) == Rational(80, 81));
    CHECK(f_statistic({poly_sequence(parse_poly("x^3+x"), 27), 3, 1, Rational(1, 2)}) == 0);
    CHECK(f_statistic({range(1, 5), 3, 1, 10}) == Rational(4, 5));
    CHECK(f_statistic({range(1, 3), 3, 1, 9}) == Rational(2, 3));
    CHECK_THROWS_AS(f_statistic({range(1, 5), 3, 1, 0}), DomainError);
}

TEST_CASE("ppc_sweep") {
    const std::vector<Rational> s{1};
    const std::vector<std::size_t> schedule{81, 243, 729, 2187, 6561};
    const auto rows = ppc_sweep(SequenceSpec::polynomial(parse_poly("x"), 3), Rational(1, 2), s, schedule);
    REQUIRE(rows.size() == 5);
    CHECK(rows.back().value == Rational(80, 81));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value >= rows[i - 1].value);

    const std::vector<Rational> radii{Rational(1, 3), Rational(1, 2), Rational(2, 3)};
    const std::vector<std::size_t> powers{27, 81};
    for (const auto& row : ppc_sweep(SequenceSpec::polynomial(parse_poly("x^3+x"), 3), 1, radii, powers)) {
        CHECK(row.value == 0);
    }
    CHECK(rows.front().n == 81);
    const auto squares = ppc_sweep(SequenceSpec::polynomial(parse_poly("x^2"), 3), 1, s, std::vector<std::size_t>{9});
    CHECK(squares.front().value > 0);

    const auto linear = SequenceSpec::linear(digits_of(1, 3, 2), digits_of(0, 3, 2));
    CHECK_THROWS_AS(ppc_sweep(linear, 1, s, std::vector<std::size_t>{81}), PrecisionError);
    CHECK_THROWS_AS(ppc_sweep(linear, 1, s, std::vector<std::size_t>{}), DomainError);
}

TEST_CASE("F at alpha = 1 and N = p^k vanishes for low-discrepancy polynomials") {
    for (const auto& [text, p] : std::vector<std::pair<const char*, std::uint32_t>>{
             {"x^3+x", 3}, {"x^3+x+2", 3}, {"x^5+4x^3+4x", 5}}) {
        for (unsigned k = 1; k <= 5; ++k) {
            const std::size_t n = ipow(BigInt(p), k).get_ui();
            const auto xs = poly_sequence(parse_poly(text), n);
            for (const Rational& s : {Rational(1, 7), Rational(1, 2), Rational(99, 100)}) {
                CHECK(f_statistic({xs, p, 1, s}) == 0);
            }
        }
    }
}
