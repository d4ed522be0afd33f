#include "quadfield/quadfield.hpp"

#include <cmath>

#include "common/error.hpp"

namespace matsplit::quadfield {

using exact::Integer;

namespace {

bool squarefree(std::int64_t d) {
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

Scalar conj_product(const Scalar& x, const Scalar& y) { return x * y.conj(); }

}  // namespace

FieldData field_data(std::int64_t d) {
  if (d <= 0 || !squarefree(d)) fail(ErrorCode::kDomain, "d must be a squarefree positive integer");
  FieldData f;
  f.d = d;
  f.half_integral = d % 4 == 3;
  f.discriminant = f.half_integral ? d : 4 * d;
  f.euclidean = d == 1 || d == 2 || d == 3 || d == 7 || d == 11;
  return f;
}

Scalar omega(std::int64_t d) {
  return field_data(d).half_integral ? Scalar(Rational(1, 2), Rational(1, 2), d) : Scalar::root(d);
}

Surd kappa(std::int64_t d) {
  FieldData f = field_data(d);
  if (f.half_integral) return Surd(exact::make_rational(d + 1, 4)) / Surd::sqrt_of(Rational(d));
  return Surd::sqrt_of(exact::make_rational(d + 1, 4));
}

long tau(std::int64_t d) { return kappa(d).floor().get_si() + 1; }

NearestPoint nearest_ok(const embed::Complex& z, std::int64_t d) {
  FieldData f = field_data(d);
  const embed::Real sd = sqrt(embed::Real(d));
  auto candidate = [&](const Rational& shift) {
    // Nearest point of shift * (1 + sqrt(-d)) + Z + Z sqrt(-d).
    embed::Real s = embed::to_real(shift);
    Rational a = Rational(embed::round_to_integer(z.re - s)) + shift;
    Rational b = Rational(embed::round_to_integer(z.im / sd - s)) + shift;
    Scalar alpha(a, b, d);
    embed::Complex diff = z - embed::to_complex(alpha);
    return NearestPoint{alpha, embed::abs(diff)};
  };
  NearestPoint best = candidate(Rational(0));
  if (f.half_integral) {
    NearestPoint other = candidate(Rational(1, 2));
    if (other.distance < best.distance) best = other;
  }
  return best;
}

HermitianLattice make_hermitian_lattice(std::int64_t d, const std::array<std::array<Scalar, 2>, 2>& generators) {
  HermitianLattice m;
  m.field = field_data(d);
  m.generators = generators;
  for (auto& g : m.generators)
    for (auto& x : g) {
      if (x.d() != 0 && x.d() != d) fail(ErrorCode::kType, "generator entry from a different field");
      x = Scalar(x.a(), x.b(), d);
      if (!x.is_integral()) fail(ErrorCode::kDomain, "generator entry outside O_K");
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m.gram[i][j] = conj_product(m.generators[i][0], m.generators[j][0]) +
                     conj_product(m.generators[i][1], m.generators[j][1]);
  const auto& g = m.generators;
  if ((g[0][0] * g[1][1] - g[0][1] * g[1][0]).is_zero())
    fail(ErrorCode::kDimension, "generators are dependent over K");
  return m;
}

Rational hermitian_determinant(const HermitianLattice& m) {
  return (m.gram[0][0] * m.gram[1][1] - m.gram[0][1] * m.gram[1][0]).a();
}

RationalMatrix realization_gram(const HermitianLattice& m) {
  const std::int64_t d = m.field.d;
  const Scalar units[2] = {Scalar::one(d), omega(d)};
  RationalMatrix g(4, 4, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g(i, j) = (units[i % 2] * units[j % 2].conj() * m.gram[i / 2][j / 2]).a();
  return g;
}

GammaH gamma_h(const HermitianLattice& m) {
  GammaH out;
  out.det = hermitian_determinant(m);
  if (sgn(out.det) <= 0) fail(ErrorCode::kDomain, "Hermitian Gram matrix is not positive definite");
  out.min_norm2 = lattice::lambda1_squared(realization_gram(m));
  out.value = Surd(out.min_norm2) / Surd::sqrt_of(out.det);
  return out;
}

Surd gamma_h_upper(std::int64_t d) {
  return Surd::sqrt_of(exact::make_rational(field_data(d).discriminant, 2));
}

Surd gamma_h_kappa_upper(std::int64_t d) {
  Rational k2 = kappa(d).square();
  if (k2 >= 1) fail(ErrorCode::kDomain, "covering radius is at least 1 for this field");
  long t = tau(d);
  return Surd::sqrt_of(Rational(t * t) / (1 - k2));
}

Rational r_lambda_upper(std::int64_t d) { return gamma_h_upper(d).square() / 2; }

RLambda empirical_r_lambda(const RationalMatrix& gram, const RankFn& rank, std::int64_t d,
                           const lattice::EnumerationOptions& options) {
  RLambda out;
  out.bound = exact::to_long_double(r_lambda_upper(d));
  lattice::ReducedGram r = lattice::reduce_gram(gram);
  Rational top = r.gram(0, 0);
  for (std::size_t i = 1; i < r.gram.rows(); ++i) top = std::max(top, r.gram(i, i));
  // Every reduced basis vector has norm <= sqrt(top), so some rank-2 element
  // appears by that bound unless all of them have rank 1; widen once if so.
  long double bound = std::sqrt(exact::to_long_double(top)) * (1 + 1e-9L);
  bool have1 = false, have2 = false;
  for (int round = 0; round < 3 && !(have1 && have2); ++round, bound *= 2) {
    auto found = lattice::enumerate_short(lattice::to_real_gram(r.gram), bound, options);
    for (const auto& v : found.vectors) {
      Rational n2 = lattice::exact_quadratic_form(r.gram, v.coeffs);
      std::size_t k = rank(lattice::coefficients_in_input(r.u, v.coeffs));
      if (k == 1 && (!have1 || n2 < out.rank1_norm2)) {
        out.rank1_norm2 = n2;
        have1 = true;
      }
      if (k == 2 && (!have2 || n2 < out.rank2_norm2)) {
        out.rank2_norm2 = n2;
        have2 = true;
      }
    }
  }
  if (!have1 || !have2) fail(ErrorCode::kEnumerationExhausted, "no rank-1 or rank-2 element found");
  out.ratio = exact::to_long_double(out.rank1_norm2 / out.rank2_norm2);
  return out;
}

}  // namespace matsplit::quadfield
