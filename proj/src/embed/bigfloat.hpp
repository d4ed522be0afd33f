#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>

#include "exactnum/matrix.hpp"
#include "exactnum/rational.hpp"
#include "exactnum/scalar.hpp"

namespace matsplit::embed {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Working precision of Real is process-wide; a scope holds it and serializes
// high-precision sections across threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned bits() const { return bits_; }

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned bits_;
  unsigned saved_digits_;
};

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  friend Complex operator+(Complex x, const Complex& y) { return x += y; }
  friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
  friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
  friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
  Complex operator-() const { return Complex(-re, -im); }
};

inline Real abs2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return sqrt(abs2(z)); }

using RealMatrix = exact::Matrix<Real>;
using ComplexMatrix = exact::Matrix<Complex>;

Real to_real(const exact::Rational& q);
// a + b*sqrt(-d) with sqrt(-d) = i*sqrt(d).
Complex to_complex(const exact::Scalar& s);

// Nearest p/den.
exact::Rational rationalize_real(const Real& x, const exact::Integer& den);
exact::Integer round_to_integer(const Real& x);

// 2^e at the working precision.
Real power_of_two(long e);

}  // namespace matsplit::embed
