#pragma once

#include "acs/rational.hpp"

namespace acs {

// Leading coefficient h_m of the m-th Hirzebruch L-polynomial (the coefficient
// of p_m):  h_m = 2^{2m} (2^{2m-1} - 1) / (2m)! * B_m  with B_m in the
// unsigned convention. h_1 = 1/3, h_2 = 7/45, h_3 = 62/945.
Rat l_genus_leading(unsigned long m);

// Coefficient h_{k,k} of p_k^2 in L_{2k}:  h_{k,k} = h_k^2 / 2 - h_{2k} / 2.
Rat l_genus_square_coefficient(unsigned long k);

// The three coefficients the signature evaluation on a middle-concentrated
// cohomology ring needs, bundled.
struct GenusCoefficients {
    unsigned long k;
    Rat h_k;
    Rat h_2k;
    Rat h_kk;
};
GenusCoefficients genus_coefficients(unsigned long k);

}  // namespace acs
