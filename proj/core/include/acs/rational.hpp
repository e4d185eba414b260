#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace acs {

// Everything with mathematical weight in this library is exact. Int is an
// arbitrary-precision integer; Rat is an arbitrary-precision rational kept in
// canonical form: reduced, denominator >= 1, sign on the numerator, zero
// stored as 0/1. GMP's mpq arithmetic preserves canonical form, so the only
// place that needs care is direct construction from a numerator/denominator
// pair -- always go through make_rational().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace acs
