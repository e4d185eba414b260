#pragma once

#include "acs/rational.hpp"

namespace acs {

// Bernoulli numbers in the unsigned non-trivial convention: the m-th entry is
// |B_{2m}| of the classical even-index sequence, so the sequence starts
// 1/6, 1/30, 1/42, 1/30, 5/66, ...
struct BernoulliEntry {
    unsigned long index;  // m
    Rat value;            // N_m / D_m, reduced
    Int numerator;        // N_m (>= 1, odd, coprime to 3)
    Int denominator;      // D_m (squarefree; product of primes p with p-1 | 2m)
};

BernoulliEntry bernoulli(unsigned long m);

// Fill the shared cache up to index m. The cache is mutex-guarded, so this is
// optional; call it before fanning out concurrent readers to avoid serializing
// them on the first lookup.
void bernoulli_precompute(unsigned long m);

// Product of all primes p with (p-1) | 2m, by enumerating divisors of 2m and
// testing d+1 for primality. Deliberately shares no code with bernoulli(): the
// two paths cross-check each other (von Staudt-Clausen).
Int vsc_denominator(unsigned long m);

// The one floating-point corner of the library. Compares bernoulli(m) against
// (2m)! / (2^{2m-1} pi^{2m}) * sum_{j=1}^{terms} j^{-2m}, a partial sum for
// zeta(2m). Guards the sign/indexing convention.
struct ZetaComparison {
    double exact;           // bernoulli(m) rounded to double
    double estimate;        // the zeta-formula partial sum
    double relative_error;  // |estimate - exact| / |exact|
};
// Throws std::overflow_error once (2m)! leaves double range.
ZetaComparison zeta_cross_check(unsigned long m, unsigned long terms);

}  // namespace acs
