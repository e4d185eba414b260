#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acs/genus.hpp"
#include "acs/sphere.hpp"
#include "acs/valuation.hpp"

#include <random>

using namespace acs;

TEST_CASE("verdict examples") {
    CHECK(sphere_verdict(2).outcome == SphereOutcome::Allowed);
    CHECK(sphere_verdict(6).outcome == SphereOutcome::Allowed);

    const SphereVerdict d4 = sphere_verdict(4);
    CHECK(d4.outcome == SphereOutcome::SignatureObstruction);
    CHECK(d4.signature_witness == make_rational(-4, 3));  // 4 * (-1) * h_1

    const SphereVerdict d10 = sphere_verdict(10);
    CHECK(d10.outcome == SphereOutcome::FactorialObstruction);
    CHECK(d10.factorial_witness == 24);  // 4!, which does not divide 2

    CHECK_THROWS_AS(sphere_verdict(5), std::invalid_argument);
    CHECK_THROWS_AS(sphere_verdict(0), std::invalid_argument);
}

TEST_CASE("allowed exactly in dimensions two and six, up to 400") {
    for (unsigned long dim = 2; dim <= 400; dim += 2) {
        const SphereVerdict v = sphere_verdict(dim);
        const bool allowed = v.outcome == SphereOutcome::Allowed;
        REQUIRE(allowed == (dim == 2 || dim == 6));
        if (v.outcome == SphereOutcome::FactorialObstruction) {
            // the witness genuinely fails to divide chi = 2
            REQUIRE_FALSE(mpz_divisible_p(Int(2).get_mpz_t(),
                                          v.factorial_witness.get_mpz_t()));
        }
    }
}

TEST_CASE("signature witnesses are 4(-1)^k h_k and nonzero") {
    for (unsigned long k = 1; k <= 100; ++k) {
        const SphereVerdict v = sphere_verdict(4 * k);
        REQUIRE(v.outcome == SphereOutcome::SignatureObstruction);
        Rat expected = Rat(4) * l_genus_leading(k);
        if (k % 2 != 0) expected = -expected;
        REQUIRE(v.signature_witness == expected);
        REQUIRE(sgn(v.signature_witness) != 0);
    }
}

TEST_CASE("top Chern divisor") {
    CHECK(chern_top_divisor(1) == 1);
    CHECK(chern_top_divisor(3) == 2);
    CHECK(chern_top_divisor(5) == 24);
    CHECK(chern_realizable(3, Int(4)));
    CHECK_FALSE(chern_realizable(5, Int(2)));
    CHECK(chern_realizable(7, Int(0)));
}

TEST_CASE("realizability is exactly divisibility by (n-1)!") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const unsigned long n = rng() % 20 + 1;
        const long v = static_cast<long>(rng() % 2000000000ul) - 1000000000l;
        const Int value(v);
        const Int d = chern_top_divisor(n);
        REQUIRE(chern_realizable(n, value) ==
                (mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t()) != 0));
    }
}

TEST_CASE("Borel-Serre violating primes") {
    CHECK(borel_serre_violations(4, Int(2)) == std::vector<unsigned long>{3});
    CHECK(borel_serre_violations(3, Int(2)).empty());
    CHECK(borel_serre_violations(2, Int(2)).empty());
    CHECK(borel_serre_violations(1, Int(5)).empty());
}

TEST_CASE("integral homology spheres are obstructed above dimension six") {
    // with chi = 2, some prime p < n coprime to n survives for every n >= 4
    for (unsigned long n = 4; n <= 100; ++n)
        REQUIRE_FALSE(borel_serre_violations(n, Int(2)).empty());
}
