#include "acs/valuation.hpp"

#include <stdexcept>
#include <string>

namespace acs {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int pow_ui(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

namespace {

void require_prime(unsigned long p, const char* who) {
    if (!is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p = " +
                                    std::to_string(p) + " is not prime");
}

}  // namespace

long factorial_valuation(unsigned long n, unsigned long p) {
    require_prime(p, "factorial_valuation");
    long v = 0;
    while (n >= p) {
        n /= p;
        v += static_cast<long>(n);
    }
    return v;
}

long valuation(const Int& n, unsigned long p) {
    require_prime(p, "valuation");
    if (sgn(n) == 0)
        throw std::domain_error("valuation: nu_p(0) is infinite");
    Int rest;
    Int prime(static_cast<unsigned long>(p));
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rat& q, unsigned long p) {
    if (sgn(q) == 0)
        throw std::domain_error("valuation: nu_p(0) is infinite");
    return valuation(numerator(q), p) - valuation(denominator(q), p);
}

FactorialTwoAdicBound factorial_two_adic_bound(unsigned long n) {
    if (n < 1)
        throw std::invalid_argument("factorial_two_adic_bound: n >= 1 required");
    const long v = factorial_valuation(n, 2);
    const long bound = static_cast<long>(n) - 1;
    return {v, bound, v == bound};
}

bool is_power_of_two(unsigned long n) {
    return n > 0 && (n & (n - 1)) == 0;
}

bool is_power_of_two(const Int& n) {
    return sgn(n) > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

}  // namespace acs
