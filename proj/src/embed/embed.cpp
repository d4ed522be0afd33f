#include "embed/embed.hpp"

#include <boost/math/constants/constants.hpp>

#include <optional>
#include <random>

#include "exactnum/linalg.hpp"

namespace matsplit::embed {

using algebra::Element;
using exact::Integer;
using exact::Scalar;

namespace {

using Poly = std::vector<Scalar>;  // low degree first
using CPoly = std::vector<Complex>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Scalar q = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

bool is_squarefree(const Poly& f) {
  Poly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Scalar(static_cast<long>(i)));
  trim(df);
  Poly a = f, b = df;
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

// Monic minimal polynomial of z, or empty when its degree exceeds max_degree.
Poly minimal_polynomial(const algebra::StructureConstants& table, const Element& z,
                        std::size_t max_degree) {
  const std::int64_t d = table.field();
  std::vector<Element> powers{algebra::find_identity(table)};
  for (std::size_t deg = 1; deg <= max_degree; ++deg) {
    powers.push_back(algebra::multiply(table, powers.back(), z));
    exact::ExactMatrix cols(table.dim(), powers.size(), Scalar::zero(d));
    for (std::size_t k = 0; k < table.dim(); ++k)
      for (std::size_t s = 0; s < powers.size(); ++s) cols(k, s) = powers[s][k] + Scalar::zero(d);
    auto ker = exact::kernel_of(cols);
    if (ker.empty()) continue;
    Poly p = ker[0];
    Scalar lead = p.back().inverse();
    for (auto& c : p) c = c * lead;
    return p;
  }
  return {};
}

Complex horner(const CPoly& p, const Complex& x) {
  Complex acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// All roots of a monic polynomial by Aberth-Ehrlich iteration.
std::vector<Complex> polynomial_roots(const CPoly& p, unsigned bits) {
  const std::size_t n = p.size() - 1;
  if (n == 1) return {-p[0]};
  CPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Complex(Real(static_cast<long>(i))));
  Real radius(1);
  for (const auto& c : p) radius = std::max(radius, Real(1) + abs(c));
  std::vector<Complex> z(n);
  Real pi = boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = 2 * pi * k / n + Real(0.4);
    z[k] = Complex(radius * cos(angle) / 2, radius * sin(angle) / 2);
  }
  Real tol = power_of_two(-static_cast<long>(bits) + 4);
  for (unsigned iter = 0; iter < 20 * bits; ++iter) {
    Real worst(0);
    for (std::size_t k = 0; k < n; ++k) {
      Complex pv = horner(p, z[k]);
      if (abs2(pv) == 0) continue;
      Complex ratio = pv / horner(dp, z[k]);
      Complex sum;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(Real(1)) / (z[k] - z[j]);
      Complex w = ratio / (Complex(Real(1)) - ratio * sum);
      z[k] -= w;
      Real rel = abs(w) / (1 + abs(z[k]));
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }
  // Newton polish.
  for (auto& r : z)
    for (int it = 0; it < 3; ++it) {
      Complex dv = horner(dp, r);
      if (abs2(dv) == 0) break;
      r -= horner(p, r) / dv;
    }
  return z;
}

int sign_at(const Poly& f, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i].a();
  return sgn(acc);
}

struct Attempt {
  std::vector<ComplexMatrix> images;
  Real residual;
  Real scale;
};

std::optional<Attempt> try_embedding(const algebra::StructureConstants& table, const Element& z,
                                     std::size_t n, unsigned bits) {
  const std::size_t m = table.dim();
  const std::int64_t d = table.field();
  Poly f = minimal_polynomial(table, z, n);
  if (f.size() != n + 1 || !is_squarefree(f)) return std::nullopt;
  CPoly cf;
  for (const auto& c : f) cf.push_back(to_complex(c));
  auto roots = polynomial_roots(cf, bits);
  std::optional<Complex> lambda;
  if (d == 0) {
    Integer den = Integer(1) << bits;
    for (const auto& r : roots) {
      Real mag = 1 + abs(r.re);
      if (abs(r.im) > power_of_two(-static_cast<long>(bits) / 2) * mag) continue;
      Real delta = power_of_two(-static_cast<long>(bits) / 3) * mag;
      int lo = sign_at(f, rationalize_real(r.re - delta, den));
      int hi = sign_at(f, rationalize_real(r.re + delta, den));
      if (lo * hi < 0) {
        lambda = Complex(r.re);
        break;
      }
    }
    if (!lambda) return std::nullopt;
  } else {
    lambda = roots[0];
  }

  // Kernel of y -> y z - lambda y by Gauss-Jordan with full pivoting.
  exact::ExactMatrix rz = algebra::right_regular(table, z);
  ComplexMatrix a(m, m);
  Real scale(0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = to_complex(rz(i, j));
      if (i == j) a(i, j) -= *lambda;
      scale = std::max(scale, abs(a(i, j)));
    }
  std::vector<std::size_t> perm(m);
  for (std::size_t j = 0; j < m; ++j) perm[j] = j;
  const std::size_t rank = m - n;
  for (std::size_t s = 0; s < rank; ++s) {
    std::size_t pi = s, pj = s;
    Real best(-1);
    for (std::size_t i = s; i < m; ++i)
      for (std::size_t j = s; j < m; ++j) {
        Real v = abs2(a(i, j));
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (sqrt(best) < power_of_two(-static_cast<long>(bits) / 4) * scale) return std::nullopt;
    a.swap_rows(s, pi);
    if (pj != s) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, s), a(i, pj));
      std::swap(perm[s], perm[pj]);
    }
    Complex inv = Complex(Real(1)) / a(s, s);
    for (std::size_t j = 0; j < m; ++j) a(s, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == s) continue;
      Complex factor = a(i, s);
      if (abs2(factor) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) a(i, j) -= factor * a(s, j);
    }
  }
  for (std::size_t i = rank; i < m; ++i)
    for (std::size_t j = rank; j < m; ++j)
      if (abs(a(i, j)) > power_of_two(-static_cast<long>(bits) / 2) * scale) return std::nullopt;

  // Kernel basis: v_t = e_{perm[t]} - sum_s a(s, t) e_{perm[s]} for free t.
  std::vector<std::vector<Complex>> v(n, std::vector<Complex>(m));
  for (std::size_t t = 0; t < n; ++t) {
    v[t][perm[rank + t]] = Complex(Real(1));
    for (std::size_t s = 0; s < rank; ++s) v[t][perm[s]] = -a(s, rank + t);
  }
  std::vector<std::vector<std::vector<Complex>>> gamma(m, std::vector<std::vector<Complex>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      gamma[i][j].resize(m);
      for (std::size_t k = 0; k < m; ++k)
        if (!table(i, j, k).is_zero()) gamma[i][j][k] = to_complex(table(i, j, k));
    }

  Attempt out;
  for (std::size_t k = 0; k < m; ++k) {
    ComplexMatrix img(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      // (a_k v_j)_r = sum_s v_j[s] gamma_{k s r}; coordinates sit at the free slots.
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = perm[rank + i];
        Complex acc;
        for (std::size_t s = 0; s < m; ++s)
          if (!table(k, s, r).is_zero()) acc += v[j][s] * gamma[k][s][r];
        img(i, j) = acc;
      }
    }
    out.images.push_back(std::move(img));
  }

  Real size(1);
  for (const auto& img : out.images) {
    Real fro(0);
    for (const auto& x : img.data()) fro += abs2(x);
    size = std::max(size, fro);
  }
  Real residual(0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ComplexMatrix prod = out.images[i] * out.images[j];
      for (std::size_t k = 0; k < m; ++k) {
        if (table(i, j, k).is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) prod(r, c) -= gamma[i][j][k] * out.images[k](r, c);
      }
      Real fro(0);
      for (const auto& x : prod.data()) fro += abs2(x);
      residual = std::max(residual, sqrt(fro));
    }
  Element e = algebra::find_identity(table);
  ComplexMatrix one(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    if (e[k].is_zero()) continue;
    Complex c = to_complex(e[k]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) one(r, s) += c * out.images[k](r, s);
  }
  Real unit(0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) unit += abs2(one(r, s) - Complex(Real(r == s ? 1 : 0)));
  residual = std::max(residual, sqrt(unit));
  out.residual = residual;
  out.scale = size;
  if (residual > power_of_two(-static_cast<long>(bits) / 2) * size) return std::nullopt;
  return out;
}

}  // namespace

Embedding split_numeric(const algebra::StructureConstants& table, const orders::Order& order,
                        unsigned precision_bits, std::uint64_t seed, unsigned max_attempts) {
  if (precision_bits < kMinPrecisionBits) {
    fail(ErrorCode::kDomain, "precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  }
  const std::size_t n = table.matrix_size();
  const std::int64_t d = table.field();
  auto basis = order.basis();
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    // Widen the coefficient range as attempts fail.
    long spread = 2 + attempt / 8;
    std::uniform_int_distribution<long> pick(-spread, spread);
    RationalVector coords(basis.empty() ? 0 : basis[0].size(), 0);
    for (const auto& b : basis) {
      long c = pick(rng);
      if (c == 0) continue;
      for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += c * b[k];
    }
    Element z = algebra::from_rational_coords(coords, d);
    for (auto& x : z) x = x + Scalar::zero(d);
    auto got = try_embedding(table, z, n, precision_bits);
    if (!got) continue;
    Embedding e;
    e.n = n;
    e.d = d;
    e.precision_bits = precision_bits;
    e.images = std::move(got->images);
    e.residual = got->residual;
    e.error_radius = std::max(got->residual, power_of_two(-static_cast<long>(precision_bits)) * got->scale);
    e.splitting_element = std::move(z);
    return e;
  }
  fail(ErrorCode::kPrecisionInsufficient,
       "no numerically separated splitting element found at " + std::to_string(precision_bits) + " bits");
}

ComplexMatrix image_of(const Embedding& e, const Element& x) {
  if (x.size() != e.images.size()) fail(ErrorCode::kDimension, "element length does not match embedding");
  ComplexMatrix out(e.n, e.n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    Complex c = to_complex(x[k]);
    for (std::size_t r = 0; r < e.n; ++r)
      for (std::size_t s = 0; s < e.n; ++s) out(r, s) += c * e.images[k](r, s);
  }
  return out;
}

ComplexMatrix image_of_rational(const Embedding& e, const RationalVector& coords) {
  return image_of(e, algebra::from_rational_coords(coords, e.d));
}

std::vector<Real> vectorize(const ComplexMatrix& m, bool complex_field) {
  std::vector<Real> out;
  for (const auto& x : m.data()) out.push_back(x.re);
  if (complex_field)
    for (const auto& x : m.data()) out.push_back(x.im);
  return out;
}

EmbeddedLattice embed_vectors(std::vector<std::vector<Real>> vectors, Real error_radius) {
  EmbeddedLattice out;
  out.dim = vectors.size();
  out.vectors = std::move(vectors);
  out.gram = RealMatrix(out.dim, out.dim);
  for (std::size_t i = 0; i < out.dim; ++i)
    for (std::size_t j = i; j < out.dim; ++j) {
      Real s(0);
      for (std::size_t k = 0; k < out.vectors[i].size(); ++k) s += out.vectors[i][k] * out.vectors[j][k];
      out.gram(i, j) = s;
      out.gram(j, i) = s;
    }
  out.error_radius = std::move(error_radius);
  return out;
}

EmbeddedLattice embed_order(const Embedding& e, const orders::Order& order) {
  std::vector<std::vector<Real>> vectors;
  for (const auto& b : order.basis()) vectors.push_back(vectorize(image_of_rational(e, b), e.d != 0));
  // Basis coordinates scale the per-entry image error.
  Real worst(1);
  for (const auto& b : order.basis()) {
    Real s(0);
    for (const auto& x : b) s += abs(to_real(x));
    worst = std::max(worst, s);
  }
  return embed_vectors(std::move(vectors), e.error_radius * worst);
}

RationalizedBasis rationalize(const EmbeddedLattice& lattice, const exact::Integer& target_denominator) {
  if (target_denominator <= 0) fail(ErrorCode::kDomain, "target denominator must be positive");
  RationalizedBasis out;
  out.denominator = target_denominator;
  for (const auto& v : lattice.vectors) {
    RationalVector w;
    for (const auto& x : v) w.push_back(rationalize_real(x, target_denominator));
    out.vectors.push_back(std::move(w));
  }
  out.perturbation = lattice.error_radius + to_real(Rational(1) / (2 * target_denominator));
  return out;
}

}  // namespace matsplit::embed
