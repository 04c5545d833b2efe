#include "doctest.h"

#include <random>

#include "../oracles.hpp"
#include "padisc/error.hpp"
#include "padisc/permcheck.hpp"
#include "padisc/polynomial.hpp"

using namespace padisc;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<BigInt> c;
    for (long a : ascending) c.emplace_back(a);
    return IntPolynomial(std::move(c));
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& a : c) a = coeff(rng);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("parse_poly") {
    CHECK(parse_poly("x^5 + 2*x^3 + x") == poly({0, 1, 0, 2, 0, 1}));
    CHECK(parse_poly("3") == poly({3}));
    CHECK(parse_poly("x^3 - 2x + x") == poly({0, -1, 0, 1}));
    CHECK(parse_poly("-x^2+1") == poly({1, 0, -1}));
    CHECK(parse_poly("  2 x ^ 2  -  -3 ") == poly({3, 0, 2}));
    CHECK(parse_poly("x - x") == IntPolynomial());
    CHECK(parse_poly("[1, 0, 1, 0]") == poly({0, 1, 0, 1}));
    CHECK(parse_poly("[-2, 0]") == poly({0, -2}));
    CHECK(parse_poly("123456789012345678901234567890x").coefficient(1) ==
          BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse_poly errors carry positions") {
    for (const char* bad : {"", "x^", "2*", "x^2 +", "y", "x^-1", "x^99999999", "[1,,2]", "[1,2", "2 3", "x^2x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_poly(bad), ParseError);
    }
    try {
        parse_poly("x + y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("render and parse round-trip") {
    CHECK(render(poly({1, -1, 0, 2, 0, 1})) == "x^5 + 2x^3 - x + 1");
    CHECK(render(IntPolynomial()) == "0");
    CHECK(render(poly({0, -1})) == "-x");
    CHECK(render(poly({-3})) == "-3");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const IntPolynomial f = random_poly(rng, 8, 50);
        CHECK(parse_poly(render(f)) == f);
    }
}

TEST_CASE("arithmetic and exact evaluation") {
    const IntPolynomial f = poly({0, -2, 0, 1});
    CHECK(f(4) == 56);
    CHECK(f.degree() == 3);
    CHECK(IntPolynomial().degree() == -1);
    CHECK((f + poly({0, 2})) == poly({0, 0, 0, 1}));
    CHECK((f - f).is_zero());
    CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
    CHECK_THROWS_AS(IntPolynomial().leading_coefficient(), Error);
}

TEST_CASE("eval_mod") {
    CHECK(eval_mod(poly({0, -2, 0, 1}), 4, 9) == 2);
    CHECK(eval_mod(poly({-7, 3, 1}), 0, 5) == 3);
    CHECK(eval_mod(poly({3, 0, 0, 4}), 1, 7) == 0);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const IntPolynomial f = random_poly(rng, 7, 100);
        const long x = static_cast<long>(rng() % 2000) - 1000;
        const long m = static_cast<long>(rng() % 500) + 1;
        CHECK(eval_mod(f, x, m) == oracle::mod(oracle::eval(f.coefficients(), x), m));
    }
}

TEST_CASE("derivative") {
    CHECK(derivative(poly({0, 1, 0, 1})) == poly({1, 0, 3}));
    CHECK(derivative(poly({5})).is_zero());
    CHECK(derivative(poly({0, 4, 0, 4, 0, 1})) == poly({4, 0, 12, 0, 5}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial f = random_poly(rng, 9, 30);
        const IntPolynomial g = random_poly(rng, 9, 30);
        CHECK(derivative(f + g) == derivative(f) + derivative(g));
    }
}

TEST_CASE("affine_compose") {
    CHECK(affine_compose(poly({0, 1}), {2, 1}, {1, 0}, 5) == poly({1, 2}));
    CHECK(affine_compose(poly({0, 0, 1}), {1, 0}, {1, 1}, 7) == poly({1, 2, 1}));
    CHECK(affine_compose(poly({0, -2, 0, 1}), {1, 0}, {2, 0}, 3) == poly({0, 2, 0, 2}));
    CHECK_THROWS_WITH_AS(affine_compose(poly({0, 1}), {3, 0}, {1, 0}, 9), doctest::Contains("not an affine equivalence"), DomainError);
    CHECK_THROWS_AS(affine_compose(poly({0, 1}), {1, 0}, {0, 1}, 5), DomainError);
}

TEST_CASE("affine_compose preserves the permutation property") {
    const std::uint32_t p = 5;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const IntPolynomial f = random_poly(rng, 5, 20);
        const AffineMap outer{BigInt(static_cast<long>(rng() % (p - 1) + 1)), BigInt(static_cast<long>(rng() % p))};
        const AffineMap inner{BigInt(static_cast<long>(rng() % (p - 1) + 1)), BigInt(static_cast<long>(rng() % p))};
        CHECK(is_permutation_mod(f, p) == is_permutation_mod(affine_compose(f, outer, inner, p), p));
    }
}

TEST_CASE("reduce_functional") {
    CHECK(reduce_functional(poly({0, 0, 0, 0, 0, 1}), 3) == poly({0, 1}));
    CHECK(reduce_functional(poly({0, 1, 0, 1}), 3) == poly({0, 2}));
    CHECK(reduce_functional(poly({0, 1, 1}), 3) == poly({0, 1, 1}));
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (int i = 0; i < 100; ++i) {
            const IntPolynomial f = random_poly(rng, 30, 1000);
            const IntPolynomial g = reduce_functional(f, p);
            CHECK(g.degree() <= static_cast<int>(p) - 1);
            for (std::uint32_t x = 0; x < p; ++x) CHECK(eval_mod(g, x, p) == eval_mod(f, x, p));
        }
    }
}

TEST_CASE("associated polynomials") {
    CHECK(associated_g1(poly({1, 1, 0, 0, 0, 1}), 3) == poly({1, 2}));
    CHECK(associated_g1(poly({0, 0, 0, 0, 0, 1}), 3) == poly({0, 1}));
    CHECK(associated_g1(poly({5}), 7) == poly({5}));
    CHECK(associated_g2(poly({0, 1, 0, 0, 0, 1}), 3).is_zero());
    CHECK(associated_g2(poly({0, 0, 0, 0, 0, 1}), 3) == poly({2}));
    CHECK(associated_g2(poly({0, 1, 0, 1}), 3) == poly({1}));
    CHECK_THROWS_AS(associated_g1(poly({0, 1}), 2), DomainError);
    CHECK_THROWS_AS(associated_g2(poly({0, 1}), 9), DomainError);
}

TEST_CASE("associated polynomials agree with f and f' off zero") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (int i = 0; i < 100; ++i) {
            const IntPolynomial f = random_poly(rng, 25, 50);
            const IntPolynomial g1 = associated_g1(f, p);
            const IntPolynomial g2 = associated_g2(f, p);
            CHECK(g1.degree() <= static_cast<int>(p) - 2);
            CHECK(g2.degree() <= static_cast<int>(p) - 2);
            for (std::uint32_t x = 1; x < p; ++x) {
                CHECK(eval_mod(g1, x, p) == eval_mod(f, x, p));
                CHECK(eval_mod(g2, x, p) == eval_mod(derivative(f), x, p));
            }
        }
    }
}

TEST_CASE("ResiduePolynomial matches exact evaluation") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial f = random_poly(rng, 8, 1'000'000);
        const std::uint64_t m = rng() % 1'000'000'007ULL + 1;
        const ResiduePolynomial r(f, m);
        for (int j = 0; j < 5; ++j) {
            const std::uint64_t x = rng() % m;
            CHECK(r(x) == to_u64(eval_mod(f, BigInt(static_cast<unsigned long>(x)), BigInt(static_cast<unsigned long>(m)))));
        }
    }
    CHECK_THROWS_AS(ResiduePolynomial(poly({1}), 0), DomainError);
}
