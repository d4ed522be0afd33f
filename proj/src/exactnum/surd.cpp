#include "exactnum/surd.hpp"

#include <cmath>

#include "common/error.hpp"

namespace matsplit::exact {

Integer square_part(const Integer& n) {
  if (n <= 0) fail(ErrorCode::kDomain, "square part of a non-positive integer");
  Integer rest = n;
  Integer k = 1;
  for (unsigned long p = 2; Integer(p) * p <= rest; ++p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
      rest /= p * p;
      k *= p;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
  }
  return k;
}

Surd::Surd(Rational q, const Integer& s) : q_(std::move(q)), s_(s) {
  if (s_ <= 0) fail(ErrorCode::kDomain, "surd radicand must be positive");
  Integer k = square_part(s_);
  s_ /= k * k;
  q_ *= Rational(k);
  q_.canonicalize();
  if (sgn(q_) == 0) s_ = 1;
}

Surd Surd::sqrt_of(const Rational& input) {
  Rational x = input;
  x.canonicalize();
  if (sgn(x) < 0) fail(ErrorCode::kDomain, "square root of a negative rational");
  if (sgn(x) == 0) return Surd();
  // sqrt(a/b) = sqrt(a b) / b.
  Rational q(1, x.get_den());
  q.canonicalize();
  return Surd(q, x.get_num() * x.get_den());
}

long double Surd::value() const {
  return to_long_double(q_) * std::sqrt(static_cast<long double>(to_long_double(Rational(s_))));
}

Integer Surd::floor() const {
  Rational sq = square();
  // floor(sqrt(x)) = isqrt(floor(x)) for x >= 0.
  Integer root;
  Integer fl = exact::floor(sq);
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  if (sgn(q_) >= 0) return root;
  Rational r(root);
  if (r * r == sq) return -root;
  return -root - 1;
}

std::string Surd::symbolic() const {
  if (is_rational()) return to_string(q_);
  std::string root = "sqrt(" + s_.get_str() + ")";
  Integer num = q_.get_num();
  std::string sign = num < 0 ? "-" : "";
  Integer a = abs(num);
  std::string out = sign + (a == 1 ? root : a.get_str() + "*" + root);
  if (q_.get_den() != 1) out += "/" + q_.get_den().get_str();
  return out;
}

Surd operator*(const Surd& x, const Surd& y) { return Surd(x.q_ * y.q_, x.s_ * y.s_); }

Surd operator/(const Surd& x, const Surd& y) {
  if (sgn(y.q_) == 0) fail(ErrorCode::kDomain, "division by a zero surd");
  // 1 / (q sqrt(s)) = sqrt(s) / (q s).
  return Surd(x.q_ / (y.q_ * Rational(y.s_)), x.s_ * y.s_);
}

bool operator<(const Surd& x, const Surd& y) {
  int sx = sgn(x.q_), sy = sgn(y.q_);
  if (sx != sy) return sx < sy;
  if (sx >= 0) return x.square() < y.square();
  return x.square() > y.square();
}

}  // namespace matsplit::exact
