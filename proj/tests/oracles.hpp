#pragma once

// Test-only oracles. Each deliberately uses a different algorithm from the
// library path it checks, so a bug cannot cancel out.

#include "acs/rational.hpp"

#include <vector>

namespace oracles {

// Unsigned Bernoulli numbers B_1..B_n via tangent numbers (Seidel-style
// integer triangle):  |B_{2n}| = 2n * T_n / (2^{2n} (2^{2n} - 1)).
// Pure integer arithmetic until the final division; independent of the
// library's rational binomial recurrence.
inline std::vector<acs::Rat> tangent_bernoulli(unsigned long n) {
    using acs::Int;
    std::vector<Int> t(n + 1);
    t[1] = 1;
    for (unsigned long k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned long k = 2; k <= n; ++k)
        for (unsigned long j = k; j <= n; ++j)
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    std::vector<acs::Rat> b(n + 1);
    for (unsigned long m = 1; m <= n; ++m) {
        Int pow4;
        mpz_ui_pow_ui(pow4.get_mpz_t(), 2, 2 * m);
        b[m] = acs::make_rational(Int(2 * m) * t[m], pow4 * (pow4 - 1));
    }
    return b;
}

// nu_p(n!) by materializing n! and dividing out p. The slow, obvious route.
inline long brute_factorial_valuation(unsigned long n, unsigned long p) {
    acs::Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    acs::Int rest, prime(p);
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), f.get_mpz_t(), prime.get_mpz_t()));
}

// Leading coefficients of the first three L-polynomials, from the classical
// table L_1 = p_1/3, L_2 = (7 p_2 - p_1^2)/45, L_3 = (62 p_3 - ...)/945,
// expanded once by hand via the multiplicative-sequence recursion.
inline acs::Rat classical_l_leading(unsigned long m) {
    switch (m) {
        case 1: return acs::make_rational(1, 3);
        case 2: return acs::make_rational(7, 45);
        case 3: return acs::make_rational(62, 945);
        default: throw std::invalid_argument("classical_l_leading: m <= 3 only");
    }
}

}  // namespace oracles
