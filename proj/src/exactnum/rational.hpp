#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace matsplit::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", "-p/q"; throws Error(kInput) on anything else.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
// Nearest integer, ties rounded up.
Integer round_nearest(const Rational& q);

Integer lcm_of_denominators(const Rational* begin, const Rational* end);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

long double to_long_double(const Rational& q);

}  // namespace matsplit::exact
