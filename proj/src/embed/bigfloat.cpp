#include "embed/bigfloat.hpp"

#include <cmath>

namespace matsplit::embed {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : lock_(precision_mutex()), bits_(bits), saved_digits_(Real::default_precision()) {
  // Decimal digits with at least `bits` binary digits.
  auto digits = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Real to_real(const exact::Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Complex to_complex(const exact::Scalar& s) {
  Complex z(to_real(s.a()));
  if (sgn(s.b()) != 0) z.im = to_real(s.b()) * sqrt(Real(s.d()));
  return z;
}

exact::Integer round_to_integer(const Real& x) {
  exact::Integer z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return z;
}

exact::Rational rationalize_real(const Real& x, const exact::Integer& den) {
  Real scaled;
  mpfr_mul_z(scaled.backend().data(), x.backend().data(), den.get_mpz_t(), MPFR_RNDN);
  exact::Rational q(round_to_integer(scaled), den);
  q.canonicalize();
  return q;
}

Real power_of_two(long e) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

}  // namespace matsplit::embed
