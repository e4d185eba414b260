#include "acs/genus.hpp"

#include "acs/bernoulli.hpp"
#include "acs/valuation.hpp"

#include <stdexcept>

namespace acs {

Rat l_genus_leading(unsigned long m) {
    if (m < 1)
        throw std::invalid_argument("l_genus_leading: m >= 1 required");
    const Int scale = pow_ui(2, 2 * m) * (pow_ui(2, 2 * m - 1) - 1);
    return make_rational(scale, factorial(2 * m)) * bernoulli(m).value;
}

Rat l_genus_square_coefficient(unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("l_genus_square_coefficient: k >= 1 required");
    const Rat h_k = l_genus_leading(k);
    const Rat h_2k = l_genus_leading(2 * k);
    return h_k * h_k / 2 - h_2k / 2;
}

GenusCoefficients genus_coefficients(unsigned long k) {
    if (k < 1)
        throw std::invalid_argument("genus_coefficients: k >= 1 required");
    Rat h_k = l_genus_leading(k);
    Rat h_2k = l_genus_leading(2 * k);
    Rat h_kk = h_k * h_k / 2 - h_2k / 2;
    return {k, std::move(h_k), std::move(h_2k), std::move(h_kk)};
}

}  // namespace acs
