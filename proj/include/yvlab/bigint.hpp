#pragma once

#include <gmpxx.h>

#include "errors.hpp"

namespace yvlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace yvlab
