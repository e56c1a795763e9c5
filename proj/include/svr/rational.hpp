// Arbitrary-precision rationals. Thin aliases over GMP's mpq_class; every
// numeric value in the library is exact.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace svr {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace svr
