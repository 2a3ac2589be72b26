#pragma once

#include "biquot/integer.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace biquot {

// mpq_class is kept canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

// |numerator| * denominator
Integer height(const Rational& q);

} // namespace biquot
