#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace heisenrig {

/// Exact arbitrary-precision integers and rationals (GMP-backed).
using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonicalized rational num/den. Throws on den == 0.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical "num/den" form with the denominator always present, e.g. "-3/2", "1/1".
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace heisenrig
