#pragma once

#include "acs/rational.hpp"

namespace acs {

// Deterministic trial division; the primes handled by this library are small
// (at most 65537), so nothing fancier is warranted.
bool is_prime(unsigned long p);

Int factorial(unsigned long n);

// 2^e, 3^e, ... as big integers.
Int pow_ui(unsigned long base, unsigned long exp);

// nu_p(n!) by Legendre's sum  sum_{i>=1} floor(n / p^i).
// Never materializes n!. Throws std::invalid_argument for non-prime p.
long factorial_valuation(unsigned long n, unsigned long p);

// Largest e with p^e | n. Throws std::domain_error for n = 0 (the valuation
// would be infinite) and std::invalid_argument for non-prime p.
long valuation(const Int& n, unsigned long p);

// nu_p of a nonzero rational: nu_p(num) - nu_p(den). May be negative.
long valuation(const Rat& q, unsigned long p);

// nu_2(n!) <= n - 1, with equality exactly when n is a power of two.
struct FactorialTwoAdicBound {
    long valuation;  // nu_2(n!)
    long bound;      // n - 1
    bool equality;
};
FactorialTwoAdicBound factorial_two_adic_bound(unsigned long n);

bool is_power_of_two(unsigned long n);
bool is_power_of_two(const Int& n);

}  // namespace acs
