#include "exactnum/scalar.hpp"

#include <cmath>

#include "common/error.hpp"

namespace matsplit::exact {

bool is_squarefree(std::int64_t d) {
  if (d <= 0) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) fail(ErrorCode::kDomain, "field parameter d must be nonnegative");
  if (d_ == 0 && sgn(b_) != 0) {
    fail(ErrorCode::kType, "irrational part on a rational scalar");
  }
}

std::int64_t Scalar::join(const Scalar& o) const {
  if (d_ == o.d_) return d_;
  // A plain rational (d = 0) mixes freely with any field.
  if (d_ == 0) return o.d_;
  if (o.d_ == 0) return d_;
  fail(ErrorCode::kType, "scalars over different fields: d=" + std::to_string(d_) +
                             " and d=" + std::to_string(o.d_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  d_ = join(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ - Rational(d_) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::kDomain, "division by zero");
  if (sgn(b_) == 0) return Scalar(1 / a_, 0, d_);
  Rational n = norm();
  return Scalar(a_ / n, -b_ / n, d_);
}

bool Scalar::is_integral() const {
  Rational two_a = 2 * a_;
  Rational two_b = 2 * b_;
  if (two_a.get_den() != 1 || two_b.get_den() != 1) return false;
  if (d_ % 4 == 3) {
    return (two_a.get_num() - two_b.get_num()) % 2 == 0;
  }
  return a_.get_den() == 1 && b_.get_den() == 1;
}

std::complex<long double> Scalar::to_complex() const {
  return {to_long_double(a_),
          to_long_double(b_) * std::sqrt(static_cast<long double>(d_))};
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.d_ != y.d_ && x.d_ != 0 && y.d_ != 0) return false;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string to_string(const Scalar& s) {
  if (s.is_rational()) return to_string(s.a());
  std::string out;
  if (sgn(s.a()) != 0) out = to_string(s.a()) + (sgn(s.b()) > 0 ? "+" : "");
  out += to_string(s.b()) + "*sqrt(-" + std::to_string(s.d()) + ")";
  return out;
}

}  // namespace matsplit::exact
