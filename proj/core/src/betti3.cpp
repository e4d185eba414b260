#include "acs/betti3.hpp"

#include "acs/bernoulli.hpp"
#include "acs/genus.hpp"
#include "acs/valuation.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace acs {

long infer_signature(long middle_betti, long chi) {
    if (middle_betti < 0)
        throw std::invalid_argument("infer_signature: middle_betti >= 0 required");
    std::vector<long> candidates;
    for (long sigma = -middle_betti; sigma <= middle_betti; ++sigma) {
        if (((sigma - chi) % 4 + 4) % 4 == 0) candidates.push_back(sigma);
    }
    if (candidates.size() != 1) {
        std::ostringstream os;
        os << "infer_signature: " << candidates.size()
           << " values of sigma with |sigma| <= " << middle_betti
           << " and sigma == " << chi << " (mod 4)";
        throw std::domain_error(os.str());
    }
    return candidates.front();
}

Rat eta_squared(unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("eta_squared: k >= 1 required");
    const GenusCoefficients g = genus_coefficients(k);
    const Rat numerator = Rat(6) * g.h_2k + 1;
    const Rat den_a = Rat(2) * g.h_k * g.h_k - g.h_2k;
    const Rat den_b = g.h_2k + Rat(4) * g.h_kk;
    if (den_a != den_b)
        throw std::logic_error("eta_squared: the two forms of the equation disagree");
    if (sgn(den_a) == 0) {
        std::ostringstream os;
        os << "eta_squared: 2 h_k^2 - h_{2k} vanishes at k = " << k;
        throw std::domain_error(os.str());
    }
    return numerator / den_a;
}

ClearedEquation cleared_equation(unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("cleared_equation: k >= 1 required");
    const BernoulliEntry bk = bernoulli(k);
    const BernoulliEntry b2k = bernoulli(2 * k);
    const Int fact_2k = factorial(2 * k);
    const Int fact_4k = factorial(4 * k);
    const Int mersenne_2k = pow_ui(2, 2 * k - 1) - 1;  // 2^{2k-1} - 1
    const Int mersenne_4k = pow_ui(2, 4 * k - 1) - 1;  // 2^{4k-1} - 1

    ClearedEquation eq;
    eq.k = k;
    eq.eta_free_t1 = pow_ui(2, 4 * k + 1) * mersenne_2k * mersenne_2k * fact_4k *
                     bk.numerator * bk.numerator * b2k.denominator;
    eq.eta_free_t2 = pow_ui(2, 4 * k) * mersenne_4k * fact_2k * fact_2k *
                     b2k.numerator * bk.denominator * bk.denominator;
    eq.t3 = 6 * eq.eta_free_t2;  // 3 * 2^{4k+1} ... = 6 * A2
    eq.t4 = fact_2k * fact_2k * fact_4k * bk.denominator * bk.denominator *
            b2k.denominator;
    eq.clearing_factor = eq.t4;  // c = (2k)!^2 D_k^2 (4k)! D_{2k}
    return eq;
}

TwoAdicAudit two_adic_audit(unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("two_adic_audit: k >= 1 required");
    const BernoulliEntry bk = bernoulli(k);
    const BernoulliEntry b2k = bernoulli(2 * k);
    const Int mersenne_2k = pow_ui(2, 2 * k - 1) - 1;
    const Int mersenne_4k = pow_ui(2, 4 * k - 1) - 1;

    TwoAdicAudit audit;
    audit.k = k;
    audit.l = factorial_valuation(2 * k, 2);
    const long v_fact_4k = factorial_valuation(4 * k, 2);
    // Valuation of a product is the sum over its factors; nothing here is
    // ever multiplied out.
    audit.v_t1 = static_cast<long>(4 * k + 1) + 2 * valuation(mersenne_2k, 2) +
                 v_fact_4k + 2 * valuation(bk.numerator, 2) +
                 valuation(b2k.denominator, 2);
    audit.v_t2 = static_cast<long>(4 * k) + valuation(mersenne_4k, 2) +
                 2 * audit.l + valuation(b2k.numerator, 2) +
                 2 * valuation(bk.denominator, 2);
    audit.v_t3 = valuation(Int(3), 2) + static_cast<long>(4 * k + 1) +
                 valuation(mersenne_4k, 2) + 2 * audit.l +
                 valuation(b2k.numerator, 2) + 2 * valuation(bk.denominator, 2);
    audit.v_t4 = 2 * audit.l + v_fact_4k + 2 * valuation(bk.denominator, 2) +
                 valuation(b2k.denominator, 2);
    audit.contradiction = !is_power_of_two(k);

    if (audit.contradiction) {
        const long base = static_cast<long>(4 * k) + 2 * audit.l;
        const bool ok = audit.v_t1 >= base + 4 && audit.v_t2 >= base + 2 &&
                        audit.v_t3 == base + 3 && audit.v_t4 <= base + 1;
        if (!ok) {
            std::ostringstream os;
            os << "two_adic_audit: valuation bounds violated at k = " << k
               << " (v_t1=" << audit.v_t1 << " v_t2=" << audit.v_t2
               << " v_t3=" << audit.v_t3 << " v_t4=" << audit.v_t4
               << " base=" << base << ")";
            throw std::logic_error(os.str());
        }
    }
    return audit;
}

OddPrimeAnalysis max_eta_valuation(unsigned long k, unsigned long p) {
    if (p == 2)
        throw std::invalid_argument(
            "max_eta_valuation: p = 2 is handled by two_adic_audit");
    if (!is_prime(p))
        throw std::invalid_argument("max_eta_valuation: p must be an odd prime");
    const Rat e2 = eta_squared(k);
    if (sgn(e2) == 0)
        throw std::domain_error("max_eta_valuation: eta^2 = 0");
    const long v = valuation(e2, p);
    if (v < 0 || v % 2 != 0) return {v, true, 0};
    return {v, false, v / 2};
}

std::vector<PrimeConstraint> fermat_prime_constraints(unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("fermat_prime_constraints: k >= 1 required");
    const unsigned long dim = 8 * k;
    std::vector<PrimeConstraint> constraints;
    constraints.push_back({3, 8, 1});  // eta never divisible by nine
    const std::pair<unsigned long, unsigned long> fermat[] = {
        {5, 16}, {17, 64}, {257, 1024}, {65537, 1ul << 18}};
    for (const auto& [p, threshold] : fermat) {
        if (dim >= threshold) constraints.push_back({p, threshold, 0});
    }
    return constraints;
}

Rat eta_squared_lower_bound(unsigned long k) {
    const Rat h_k = l_genus_leading(k);
    return Rat(1) / (Rat(2) * h_k * h_k);
}

bool candidate_dimension_form(unsigned long dim) {
    if (dim < 16 || dim % 8 != 0) return false;
    const unsigned long m = dim / 8;  // need m = 2^a + 2^b, so m >= 2
    return std::popcount(m) <= 2;
}

const char* to_string(Betti3Status status) {
    switch (status) {
        case Betti3Status::ExistsKnown: return "ExistsKnown";
        case Betti3Status::ImpossibleParity: return "ImpossibleParity";
        case Betti3Status::ImpossibleSmooth: return "ImpossibleSmooth";
        case Betti3Status::RuledOutNonInteger: return "RuledOutNonInteger";
        case Betti3Status::RuledOutNotSquare: return "RuledOutNotSquare";
        case Betti3Status::RuledOutParityOfEta: return "RuledOutParityOfEta";
        case Betti3Status::RuledOutPrimePower: return "RuledOutPrimePower";
        case Betti3Status::Open: return "Open";
    }
    return "?";
}

namespace {

// Floor square root, then square and compare. Exact; no floating point.
bool perfect_square_root(const Int& n, Int& root) {
    if (sgn(n) < 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

}  // namespace

Betti3Record betti3_status(unsigned long dim) {
    if (dim < 1)
        throw std::invalid_argument("betti3_status: dim >= 1 required");

    Betti3Record rec;
    rec.dim = dim;
    rec.k = 0;

    if (dim == 4) {
        rec.status = Betti3Status::ExistsKnown;
        rec.rule = "dimension 4 is realized (complex projective plane)";
        return rec;
    }
    if (dim % 2 != 0 || dim % 4 == 2) {
        rec.status = Betti3Status::ImpossibleParity;
        rec.rule = dim % 2 != 0
                       ? "Poincare duality forces even dimension"
                       : "skew middle intersection form has even rank (dim = 2 mod 4)";
        return rec;
    }
    if (dim % 8 == 4) {
        rec.status = Betti3Status::ImpossibleSmooth;
        rec.rule = "smooth manifolds with Betti sum three occur only in "
                   "dimension 4 or dimensions divisible by 8";
        return rec;
    }

    // dim = 8k: the exact Diophantine analysis.
    const unsigned long k = dim / 8;
    rec.k = k;
    rec.eta_squared = eta_squared(k);
    rec.lower_bound = eta_squared_lower_bound(k);
    rec.prime_constraints = fermat_prime_constraints(k);

    if (!is_integer(*rec.eta_squared)) {
        rec.status = Betti3Status::RuledOutNonInteger;
        rec.rule = "eta^2 = (6 h_{2k} + 1) / (2 h_k^2 - h_{2k}) is not an integer";
        return rec;
    }
    Int root;
    if (!perfect_square_root(numerator(*rec.eta_squared), root)) {
        rec.status = Betti3Status::RuledOutNotSquare;
        rec.rule = "eta^2 is an integer but not a perfect square";
        return rec;
    }
    rec.eta = root;
    if (mpz_even_p(root.get_mpz_t())) {
        rec.status = Betti3Status::RuledOutParityOfEta;
        rec.rule = "eta must be odd (2-adic count on the cleared equation)";
        return rec;
    }
    for (const PrimeConstraint& c : rec.prime_constraints) {
        if (valuation(root, c.prime) > c.max_eta_valuation) {
            rec.status = Betti3Status::RuledOutPrimePower;
            std::ostringstream os;
            os << "eta violates the p = " << c.prime
               << " divisibility constraint (applies from dimension "
               << c.min_dim << ")";
            rec.rule = os.str();
            return rec;
        }
    }

    rec.status = Betti3Status::Open;
    rec.rule = "no implemented obstruction applies; existence is not asserted";
    return rec;
}

}  // namespace acs
