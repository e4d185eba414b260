#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acs/rational.hpp"
#include "acs/valuation.hpp"

#include "oracles.hpp"

#include <random>

using namespace acs;

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(257));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(65536));
}

TEST_CASE("factorial valuation examples") {
    CHECK(factorial_valuation(10, 2) == 8);  // 5 + 2 + 1
    CHECK(factorial_valuation(1, 2) == 0);
    CHECK(factorial_valuation(0, 2) == 0);
    CHECK(factorial_valuation(4, 2) == 3);  // 24 = 2^3 * 3
    CHECK_THROWS_AS(factorial_valuation(10, 4), std::invalid_argument);
}

TEST_CASE("integer valuation examples") {
    CHECK(valuation(Int(30), 2) == 1);
    CHECK(valuation(Int(7), 7) == 1);
    CHECK(valuation(Int(-36), 3) == 2);
    CHECK_THROWS_AS(valuation(Int(0), 2), std::domain_error);
    CHECK_THROWS_AS(valuation(Int(6), 6), std::invalid_argument);
}

TEST_CASE("rational valuation can be negative") {
    CHECK(valuation(make_rational(4, 9), 3) == -2);
    CHECK(valuation(make_rational(-8, 3), 2) == 3);
    CHECK_THROWS_AS(valuation(Rat(0), 3), std::domain_error);
}

TEST_CASE("two-adic factorial bound examples") {
    auto b8 = factorial_two_adic_bound(8);
    CHECK(b8.valuation == 7);
    CHECK(b8.bound == 7);
    CHECK(b8.equality);

    auto b6 = factorial_two_adic_bound(6);
    CHECK(b6.valuation == 4);
    CHECK(b6.bound == 5);
    CHECK_FALSE(b6.equality);

    auto b1 = factorial_two_adic_bound(1);
    CHECK(b1.valuation == 0);
    CHECK(b1.bound == 0);
    CHECK(b1.equality);
}

TEST_CASE("power of two predicate") {
    CHECK(is_power_of_two(1ul));
    CHECK(is_power_of_two(256ul));
    CHECK_FALSE(is_power_of_two(24ul));
    CHECK_FALSE(is_power_of_two(0ul));
    CHECK(is_power_of_two(Int("18446744073709551616")));  // 2^64
    CHECK_FALSE(is_power_of_two(Int(-4)));
}

TEST_CASE("two-adic bound sweep, equality exactly at powers of two") {
    for (unsigned long n = 1; n <= 10000; ++n) {
        const auto b = factorial_two_adic_bound(n);
        REQUIRE(b.valuation <= b.bound);
        REQUIRE(b.equality == is_power_of_two(n));
    }
}

TEST_CASE("Legendre sum agrees with brute-force factorization of n!") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (unsigned long n = 0; n <= 2000; n += (n < 100 ? 1 : 7)) {
            REQUIRE(factorial_valuation(n, p) ==
                    oracles::brute_factorial_valuation(n, p));
        }
    }
}

TEST_CASE("rational arithmetic agrees with naive unreduced arithmetic") {
    std::mt19937_64 rng(20260823);
    auto random_int = [&] {
        return Int(std::to_string(rng()));
    };
    for (int i = 0; i < 10000; ++i) {
        const Int a = random_int(), c = random_int();
        const Int b = random_int() + 1, d = random_int() + 1;
        const Rat x = make_rational(a, b), y = make_rational(c, d);
        REQUIRE(x + y == make_rational(a * d + c * b, b * d));
        REQUIRE(x * y == make_rational(a * c, b * d));
        if (sgn(c) != 0) REQUIRE(x / y == make_rational(a * d, b * c));
    }
}

TEST_CASE("canonical form is unique") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Int a(std::to_string(rng())), b(std::to_string(rng() + 1));
        const Int c(std::to_string(rng() % 100000 + 1));
        const Rat q1 = make_rational(a, b);
        const Rat q2 = make_rational(c * a, c * b);
        REQUIRE(numerator(q1) == numerator(q2));
        REQUIRE(denominator(q1) == denominator(q2));
        REQUIRE(sgn(denominator(q1)) > 0);
    }
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    // zero is 0/1
    CHECK(denominator(make_rational(0, -7)) == 1);
    CHECK(numerator(make_rational(0, -7)) == 0);
}

TEST_CASE("negative rationals carry their sign on the numerator") {
    const Rat q = make_rational(3, -6);
    CHECK(numerator(q) == -1);
    CHECK(denominator(q) == 2);
}
