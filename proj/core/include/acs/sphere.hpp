#pragma once

#include "acs/rational.hpp"

#include <vector>

namespace acs {

// Almost complex structures on rational homology spheres. In this setting the
// Euler characteristic is 2 and the signature is 0; both are forced by the
// hypothesis, not inputs.

enum class SphereOutcome {
    Allowed,                // dim 2 or 6
    SignatureObstruction,   // n even: 0 = sigma would equal 4(-1)^{n/2} h_{n/2} != 0
    FactorialObstruction,   // n odd, n > 3: (n-1)! would have to divide chi = 2
};

const char* to_string(SphereOutcome outcome);

struct SphereVerdict {
    unsigned long dim;  // 2n
    unsigned long n;
    SphereOutcome outcome;
    // The paper-facing contradiction quantity, populated per outcome:
    Rat signature_witness;   // 4(-1)^{n/2} h_{n/2}   (SignatureObstruction)
    Int factorial_witness;   // (n-1)!, which fails to divide 2  (FactorialObstruction)
};

// Throws std::invalid_argument for odd dim (no almost-complex question there).
SphereVerdict sphere_verdict(unsigned long dim);

// (n-1)! divides the top Chern number of every complex bundle on a
// 2n-dimensional rational homology sphere, and every multiple is realized.
Int chern_top_divisor(unsigned long n);
bool chern_realizable(unsigned long n, const Int& value);

// Borel-Serre: on a closed almost complex 2n-manifold with vanishing lower
// Chern classes, every prime p < n with p not dividing n divides chi. Returns
// the primes violating that for the given chi; nonempty means obstructed.
std::vector<unsigned long> borel_serre_violations(unsigned long n, const Int& chi);

}  // namespace acs
