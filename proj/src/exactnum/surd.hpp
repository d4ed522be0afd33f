#pragma once

#include <string>

#include "exactnum/rational.hpp"

namespace matsplit::exact {

// q * sqrt(s) with s a squarefree positive integer.
class Surd {
 public:
  Surd() = default;
  Surd(Rational q) : q_(std::move(q)) { q_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Surd(Rational q, const Integer& s);

  static Surd sqrt_of(const Rational& x);

  const Rational& coefficient() const { return q_; }
  const Integer& radicand() const { return s_; }
  bool is_rational() const { return s_ == 1 || sgn(q_) == 0; }

  // Exact square, q^2 s.
  Rational square() const { return q_ * q_ * Rational(s_); }
  long double value() const;
  // floor(value), exact.
  Integer floor() const;

  // "sqrt(3)/3", "2*sqrt(7)/7", "3/2".
  std::string symbolic() const;

  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y) { return x.q_ == y.q_ && x.s_ == y.s_; }
  friend bool operator<(const Surd& x, const Surd& y);

 private:
  Rational q_ = 0;
  Integer s_ = 1;
};

// Largest k with k^2 dividing n, for n > 0.
Integer square_part(const Integer& n);

}  // namespace matsplit::exact
