#include "acs/bernoulli.hpp"

#include "acs/valuation.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace acs {

namespace {

// Classical even-index Bernoulli numbers, cache[i] = B_{2i} with sign.
// Grown under g_mutex; entries are immutable once written.
std::vector<Rat> g_cache{Rat(1)};
std::mutex g_mutex;

// Binomial recurrence sum_{j} C(n+1, j) B_j = 0, solved for B_n. Odd-index
// terms vanish for n >= 2 except j = 1, which is folded into the constant
// (1 - n)/2 below.
void extend_locked(unsigned long m) {
    for (unsigned long i = g_cache.size(); i <= m; ++i) {
        const unsigned long n = 2 * i;
        Rat sum = make_rational(1 - static_cast<long>(n), 2);
        Int binom;
        for (unsigned long j = 2; j + 2 <= n; j += 2) {
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
            sum += Rat(binom) * g_cache[j / 2];
        }
        Rat b = -sum / Rat(static_cast<unsigned long>(n + 1));
        g_cache.push_back(b);
    }
}

Rat classical_even(unsigned long m) {
    std::lock_guard<std::mutex> lock(g_mutex);
    extend_locked(m);
    return g_cache[m];
}

}  // namespace

void bernoulli_precompute(unsigned long m) {
    std::lock_guard<std::mutex> lock(g_mutex);
    extend_locked(m);
}

BernoulliEntry bernoulli(unsigned long m) {
    if (m < 1)
        throw std::invalid_argument("bernoulli: m >= 1 required");
    Rat value = abs(classical_even(m));
    Int num = numerator(value);
    Int den = denominator(value);
    return {m, std::move(value), std::move(num), std::move(den)};
}

Int vsc_denominator(unsigned long m) {
    if (m < 1)
        throw std::invalid_argument("vsc_denominator: m >= 1 required");
    const unsigned long two_m = 2 * m;
    Int product(1);
    for (unsigned long d = 1; d <= two_m; ++d) {
        if (two_m % d == 0 && is_prime(d + 1))
            product *= static_cast<unsigned long>(d + 1);
    }
    return product;
}

ZetaComparison zeta_cross_check(unsigned long m, unsigned long terms) {
    if (m < 1 || terms < 1)
        throw std::invalid_argument("zeta_cross_check: m >= 1, terms >= 1 required");

    double fact = 1.0;
    for (unsigned long i = 1; i <= 2 * m; ++i) fact *= static_cast<double>(i);
    if (!std::isfinite(fact))
        throw std::overflow_error("zeta_cross_check: (2m)! exceeds double range");

    const double factor = fact / (std::pow(2.0, 2.0 * m - 1.0) *
                                  std::pow(std::numbers::pi, 2.0 * m));

    // Partial sum for zeta(2m), smallest terms first.
    double s = 0.0;
    for (unsigned long j = terms; j >= 1; --j)
        s += std::pow(static_cast<double>(j), -2.0 * static_cast<double>(m));

    const double estimate = factor * s;
    const double exact = bernoulli(m).value.get_d();
    const double relative_error = std::abs(estimate - exact) / std::abs(exact);
    return {exact, estimate, relative_error};
}

}  // namespace acs
