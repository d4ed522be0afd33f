#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "exactnum/rational.hpp"

namespace matsplit::exact {

// Element a + b*sqrt(-d) of Q(sqrt(-d)); d == 0 denotes Q itself (b == 0).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, std::int64_t d);

  static Scalar zero(std::int64_t d) { return Scalar(0, 0, d); }
  static Scalar one(std::int64_t d) { return Scalar(1, 0, d); }
  // sqrt(-d) itself.
  static Scalar root(std::int64_t d) { return Scalar(0, 1, d); }

  std::int64_t d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar conj() const { return Scalar(a_, -b_, d_); }
  // Field norm a^2 + d b^2.
  Rational norm() const { return a_ * a_ + Rational(d_) * b_ * b_; }
  Scalar inverse() const;

  // Member of O_K: 2a, 2b integral, and a, b integral unless d = 3 mod 4 with
  // a - b integral.
  bool is_integral() const;

  std::complex<long double> to_complex() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const { return Scalar(-a_, -b_, d_); }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  std::int64_t join(const Scalar& o) const;

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

std::string to_string(const Scalar& s);

bool is_squarefree(std::int64_t d);

}  // namespace matsplit::exact
