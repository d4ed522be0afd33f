#include "exactnum/rational.hpp"

#include <cmath>

#include "common/error.hpp"

namespace matsplit::exact {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    fail(ErrorCode::kInput, "malformed rational literal '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::kInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_nearest(const Rational& q) {
  return floor(q + Rational(1, 2));
}

Integer lcm_of_denominators(const Rational* begin, const Rational* end) {
  Integer l = 1;
  for (auto it = begin; it != end; ++it) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), it->get_den_mpz_t());
  }
  return l;
}

long double to_long_double(const Rational& q) {
  // mpq_get_d loses range for huge numerators; split through exponents.
  long num_exp = 0;
  long den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(num) / den, static_cast<int>(num_exp - den_exp));
}

}  // namespace matsplit::exact
