#pragma once

#include "acs/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acs {

// Obstruction engine for closed almost complex manifolds whose Betti numbers
// sum to three. Rational cohomology is then concentrated in degrees
// 0, dim/2, dim; in dimension 8k the signature evaluation yields the
// Diophantine condition  eta^2 (2 h_k^2 - h_{2k}) = 6 h_{2k} + 1  on the
// integer eta with c_{2k} = eta * a modulo torsion.

// The unique sigma with |sigma| <= middle_betti and sigma == chi (mod 4).
// Throws std::domain_error if no unique such value exists.
long infer_signature(long middle_betti, long chi);

// Exact value of (6 h_{2k} + 1) / (2 h_k^2 - h_{2k}). Both algebraic forms of
// the equation (the other denominator being h_{2k} + 4 h_{k,k}) are evaluated
// and must agree. Throws std::domain_error on a vanishing denominator.
Rat eta_squared(unsigned long k);

// The signature equation with denominators cleared by
// c = (2k)!^2 D_k^2 (4k)! D_{2k}:
//   eta^2 * A1 - eta^2 * A2 = T3 + T4
// where A1 = 2^{4k+1} (2^{2k-1}-1)^2 (4k)! N_k^2 D_{2k},
//       A2 = 2^{4k} (2^{4k-1}-1) (2k)!^2 N_{2k} D_k^2,
//       T3 = 3 * 2^{4k+1} (2^{4k-1}-1) (2k)!^2 N_{2k} D_k^2,
//       T4 = (2k)!^2 (4k)! D_k^2 D_{2k}.
// Identities: A1 - A2 = c (2 h_k^2 - h_{2k}),  T3 + T4 = c (6 h_{2k} + 1).
struct ClearedEquation {
    unsigned long k;
    Int eta_free_t1;      // A1
    Int eta_free_t2;      // A2
    Int t3;
    Int t4;
    Int clearing_factor;  // c
};
ClearedEquation cleared_equation(unsigned long k);

// Exact 2-adic valuations of the four terms, computed by summing valuations
// of the defining factors (the giant products are never factored). For k not
// a power of two the four bounds below are mutually inconsistent with the
// equation, which is the divisibility contradiction; any violated bound is a
// fatal internal error (std::logic_error), since it would mean the exact
// arithmetic disagrees with the theorem.
struct TwoAdicAudit {
    unsigned long k;
    long l;     // nu_2((2k)!)
    long v_t1;  // nu_2(A1)       (>= 4k + 2l + 4 when k not a power of two)
    long v_t2;  // nu_2(A2)       (>= 4k + 2l + 2)
    long v_t3;  // nu_2(T3)       (=  4k + 2l + 3)
    long v_t4;  // nu_2(T4)       (<= 4k + 2l + 1 when k not a power of two)
    bool contradiction;  // true iff k is not a power of two
};
TwoAdicAudit two_adic_audit(unsigned long k);

// Odd-prime constraint on eta via nu_p(eta^2) = nu_p(T3 + T4) - nu_p(A1 - A2),
// computed exactly on the rational eta_squared(k). An odd or negative
// valuation means no integer eta can exist at all (contradiction); otherwise
// nu_p(eta) <= nu_p(eta^2) / 2. p = 2 has its own operation above.
struct OddPrimeAnalysis {
    long eta_squared_valuation;
    bool contradiction;
    long max_eta_valuation;  // meaningful only when !contradiction
};
OddPrimeAnalysis max_eta_valuation(unsigned long k, unsigned long p);

// Divisibility constraints on eta in dimension 8k: 9 never divides eta, and
// the Fermat primes 5, 17, 257, 65537 cannot divide eta once the dimension
// reaches 16, 64, 1024, 2^18 respectively.
struct PrimeConstraint {
    unsigned long prime;
    unsigned long min_dim;        // smallest dimension 8k where it applies
    long max_eta_valuation;       // 1 for p = 3, else 0
};
std::vector<PrimeConstraint> fermat_prime_constraints(unsigned long k);

// eta^2 >= 1 / (2 h_k^2): positivity of h_{2k} in the signature equation.
Rat eta_squared_lower_bound(unsigned long k);

// True iff dim = 8 (2^a + 2^b) for some a, b >= 0 (a = b allowed) -- the
// dimension form forced on manifolds with rational cohomology Q[x]/(x^3).
bool candidate_dimension_form(unsigned long dim);

enum class Betti3Status {
    ExistsKnown,          // dim 4: the complex projective plane
    ImpossibleParity,     // dim odd or dim == 2 (mod 4)
    ImpossibleSmooth,     // dim == 4 (mod 8), dim != 4: no smooth manifold at all
    RuledOutNonInteger,   // eta^2 is not an integer
    RuledOutNotSquare,    // eta^2 is an integer but not a perfect square
    RuledOutParityOfEta,  // eta exists but is even
    RuledOutPrimePower,   // eta violates a prime-divisibility constraint
    Open,                 // no implemented obstruction applies
};
const char* to_string(Betti3Status status);

struct Betti3Record {
    unsigned long dim;
    unsigned long k;  // dim / 8 when dim == 0 (mod 8), else 0
    std::optional<Rat> eta_squared;
    std::optional<Int> eta;  // the positive root, when eta_squared is a square
    Betti3Status status;
    std::vector<PrimeConstraint> prime_constraints;
    std::optional<Rat> lower_bound;  // 1 / (2 h_k^2)
    std::string rule;  // which classification rule fired, human-readable
};

// Rules, in order: dim 4 exists; parity; smooth-dimension restriction
// (dim 4 or 8k only); then the exact Diophantine analysis at dim = 8k.
Betti3Record betti3_status(unsigned long dim);

}  // namespace acs
