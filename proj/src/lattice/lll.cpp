#include "lattice/lll.hpp"

#include <cmath>

#include "exactnum/linalg.hpp"

namespace matsplit::lattice {

IntegerMatrix identity_integer_matrix(std::size_t n) {
  IntegerMatrix u(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;
  return u;
}

namespace {

// Exact quotient of integers known to divide.
Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nearest integer to a / b for b > 0, ties toward +infinity.
Integer round_div(const Integer& a, const Integer& b) {
  Integer num = 2 * a + b;
  Integer den = 2 * b;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

struct IntegralLll {
  std::size_t n;
  IntegerMatrix g;  // current Gram matrix
  IntegerMatrix u;  // current transform
  IntegerMatrix lambda;
  std::vector<Integer> dd;  // dd[i + 1] = d_i, dd[0] = 1

  Integer& d(std::size_t i) { return dd[i + 1]; }

  void reduce(std::size_t k, std::size_t l) {
    Integer twice = 2 * lambda(k, l);
    if (abs(twice) <= d(l)) return;
    Integer q = round_div(lambda(k, l), d(l));
    for (std::size_t j = 0; j < n; ++j) u(k, j) -= q * u(l, j);
    for (std::size_t j = 0; j < n; ++j) g(k, j) -= q * g(l, j);
    for (std::size_t j = 0; j < n; ++j) g(j, k) = (j == k) ? g(k, k) - q * g(l, k) : g(k, j);
    lambda(k, l) -= q * d(l);
    for (std::size_t i = 0; i < l; ++i) lambda(k, i) -= q * lambda(l, i);
  }

  void swap(std::size_t k, std::size_t kmax) {
    u.swap_rows(k, k - 1);
    g.swap_rows(k, k - 1);
    for (std::size_t j = 0; j < n; ++j) std::swap(g(j, k), g(j, k - 1));
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda(k, j), lambda(k - 1, j));
    Integer lam = lambda(k, k - 1);
    Integer b = exact_div(dd[k - 1] * d(k) + lam * lam, d(k - 1));
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lambda(i, k);
      lambda(i, k) = exact_div(d(k) * lambda(i, k - 1) - lam * t, d(k - 1));
      lambda(i, k - 1) = exact_div(b * t + lam * lambda(i, k), d(k));
    }
    d(k - 1) = b;
  }

  void orthogonalize(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer val = g(k, j);
      for (std::size_t i = 0; i < j; ++i) val = exact_div(d(i) * val - lambda(k, i) * lambda(j, i), dd[i]);
      if (j < k) {
        lambda(k, j) = val;
      } else {
        if (val == 0) fail(ErrorCode::kDimension, "lattice generators are linearly dependent");
        d(k) = val;
      }
    }
  }
};

}  // namespace

IntegerMatrix lll_gram(const IntegerMatrix& gram, const Rational& delta) {
  if (!gram.is_square()) fail(ErrorCode::kDimension, "Gram matrix must be square");
  if (delta <= Rational(1, 4) || delta >= 1) fail(ErrorCode::kDomain, "LLL parameter must lie in (1/4, 1)");
  const std::size_t n = gram.rows();
  IntegralLll s{n, gram, identity_integer_matrix(n), IntegerMatrix(n, n, Integer(0)),
                std::vector<Integer>(n + 1, Integer(1))};
  if (n == 0) return s.u;
  if (gram(0, 0) <= 0) fail(ErrorCode::kDimension, "Gram matrix is not positive definite");
  s.d(0) = gram(0, 0);
  const Integer p = delta.get_num(), q = delta.get_den();
  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      s.orthogonalize(k);
    }
    s.reduce(k, k - 1);
    // Lovasz: d_k d_{k-2} >= delta d_{k-1}^2 - lambda^2.
    Integer lam = s.lambda(k, k - 1);
    Integer lhs = q * s.d(k) * s.dd[k - 1];
    Integer rhs = p * s.d(k - 1) * s.d(k - 1) - q * lam * lam;
    if (lhs < rhs) {
      s.swap(k, kmax);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) s.reduce(k, l);
      ++k;
    }
  }
  return s.u;
}

RationalMatrix gram_of(const std::vector<RationalVector>& basis) {
  const std::size_t k = basis.size();
  RationalMatrix g(k, k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t < basis[i].size(); ++t) s += basis[i][t] * basis[j][t];
      g(i, j) = g(j, i) = s;
    }
  return g;
}

LatticeBasis lll_reduce(const std::vector<RationalVector>& basis, const Rational& delta) {
  RationalMatrix g = gram_of(basis);
  Integer den = 1;
  for (const auto& x : g.data()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntegerMatrix ig(g.rows(), g.cols(), Integer(0));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) ig(i, j) = Rational(g(i, j) * Rational(den)).get_num();
  LatticeBasis out;
  out.history = lll_gram(ig, delta);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    RationalVector v(basis.empty() ? 0 : basis[0].size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (out.history(i, j) == 0) continue;
      Rational c(out.history(i, j));
      for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * basis[j][t];
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

namespace {

// Gram-Schmidt data from a Gram matrix: mu and squared norms of b*_i.
void gram_schmidt(const RationalMatrix& g, RationalMatrix& mu, std::vector<Rational>& bstar) {
  const std::size_t n = g.rows();
  mu = RationalMatrix(n, n, Rational(0));
  bstar.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * bstar[k];
      mu(i, j) = s / bstar[j];
    }
    Rational s = g(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
    bstar[i] = s;
  }
}

}  // namespace

bool is_lll_reduced(const RationalMatrix& gram, const Rational& delta) {
  RationalMatrix mu;
  std::vector<Rational> bstar;
  gram_schmidt(gram, mu, bstar);
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu(i, j)) > Rational(1, 2)) return false;
    if (i > 0 && bstar[i] < (delta - mu(i, i - 1) * mu(i, i - 1)) * bstar[i - 1]) return false;
  }
  return true;
}

Rational gram_determinant(const RationalMatrix& gram) { return exact::determinant_of(gram); }

long double orthogonality_defect(const RationalMatrix& gram) {
  long double log_prod = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) log_prod += 0.5L * std::log(exact::to_long_double(gram(i, i)));
  long double log_det = 0.5L * std::log(exact::to_long_double(gram_determinant(gram)));
  return std::exp(log_prod - log_det);
}

LatticeBasis dual_basis(const std::vector<RationalVector>& basis) {
  RationalMatrix b = RationalMatrix::from_rows(basis);
  if (!b.is_square()) fail(ErrorCode::kDimension, "dual basis needs a full-rank square basis");
  auto inv = exact::inverse_of(b);
  if (!inv) fail(ErrorCode::kDimension, "basis is singular");
  RationalMatrix dual = inv->transposed();
  LatticeBasis out;
  for (std::size_t i = 0; i < dual.rows(); ++i) out.vectors.push_back(dual.row(i));
  out.history = identity_integer_matrix(dual.rows());
  return out;
}

bool same_lattice(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  if (a.empty() || b.empty()) return a.size() == b.size();
  return exact::ZLattice::from_generators(a, a[0].size()) == exact::ZLattice::from_generators(b, b[0].size());
}

bool is_unimodular(const IntegerMatrix& u) {
  if (!u.is_square()) return false;
  RationalMatrix r(u.rows(), u.cols(), Rational(0));
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) r(i, j) = Rational(u(i, j));
  return abs(exact::determinant_of(r)) == 1;
}

ReducedGram reduce_gram(const RationalMatrix& g) {
  Integer den = 1;
  for (const auto& x : g.data()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntegerMatrix ig(g.rows(), g.cols(), Integer(0));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) ig(i, j) = Rational(g(i, j) * Rational(den)).get_num();
  ReducedGram out;
  out.u = lll_gram(ig);
  RationalMatrix ur(g.rows(), g.cols(), Rational(0));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) ur(i, j) = Rational(out.u(i, j));
  out.gram = ur * g * ur.transposed();
  return out;
}

}  // namespace matsplit::lattice
