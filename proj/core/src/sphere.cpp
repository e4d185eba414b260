#include "acs/sphere.hpp"

#include "acs/genus.hpp"
#include "acs/valuation.hpp"

#include <stdexcept>

namespace acs {

const char* to_string(SphereOutcome outcome) {
    switch (outcome) {
        case SphereOutcome::Allowed: return "Allowed";
        case SphereOutcome::SignatureObstruction: return "SignatureObstruction";
        case SphereOutcome::FactorialObstruction: return "FactorialObstruction";
    }
    return "?";
}

SphereVerdict sphere_verdict(unsigned long dim) {
    if (dim < 2 || dim % 2 != 0)
        throw std::invalid_argument("sphere_verdict: even dim >= 2 required");

    SphereVerdict v;
    v.dim = dim;
    v.n = dim / 2;

    if (v.n == 1 || v.n == 3) {
        v.outcome = SphereOutcome::Allowed;
        return v;
    }

    if (v.n % 2 == 0) {
        // 0 = sigma = 2(-1)^k h_k chi = 4(-1)^k h_k, impossible as h_k != 0.
        const unsigned long k = v.n / 2;
        Rat witness = Rat(4) * l_genus_leading(k);
        if (k % 2 != 0) witness = -witness;
        v.outcome = SphereOutcome::SignatureObstruction;
        v.signature_witness = std::move(witness);
        return v;
    }

    // n odd, n > 3: the top Chern character term forces (n-1)! | chi = 2.
    v.outcome = SphereOutcome::FactorialObstruction;
    v.factorial_witness = factorial(v.n - 1);
    return v;
}

Int chern_top_divisor(unsigned long n) {
    if (n < 1)
        throw std::invalid_argument("chern_top_divisor: n >= 1 required");
    return factorial(n - 1);
}

bool chern_realizable(unsigned long n, const Int& value) {
    const Int d = chern_top_divisor(n);
    return mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::vector<unsigned long> borel_serre_violations(unsigned long n, const Int& chi) {
    if (n < 1)
        throw std::invalid_argument("borel_serre_violations: n >= 1 required");
    std::vector<unsigned long> violating;
    for (unsigned long p = 2; p < n; ++p) {
        if (!is_prime(p)) continue;
        if (n % p == 0) continue;
        if (mpz_divisible_ui_p(chi.get_mpz_t(), p)) continue;
        violating.push_back(p);
    }
    return violating;
}

}  // namespace acs
