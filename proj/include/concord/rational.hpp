#pragma once

#include <gmpxx.h>

#include <string>

#include "concord/errors.hpp"

namespace concord {

// Exact arithmetic backends. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; make_rational enforces that for
// raw numerator/denominator pairs.
using Integer = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(long) == 8, "64-bit long assumed for GMP interop");

inline Integer to_integer(long long v) {
    return Integer(static_cast<long>(v));
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw BadParameters("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long long num, long long den) {
    return make_rational(to_integer(num), to_integer(den));
}

// Accepts "a/b" or "a"; whitespace is not tolerated.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

}  // namespace concord
