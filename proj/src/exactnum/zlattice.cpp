#include "exactnum/zlattice.hpp"

#include "exactnum/linalg.hpp"

namespace matsplit::exact {

namespace {

std::size_t leading_column(const IntegerVector& v) {
  for (std::size_t c = 0; c < v.size(); ++c)
    if (sgn(v[c]) != 0) return c;
  return v.size();
}

void axpy(IntegerVector& y, const Integer& a, const IntegerVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

std::vector<IntegerVector> hermite_normal_form(const std::vector<IntegerVector>& input,
                                               std::size_t dim) {
  // basis[c] holds the row whose pivot is column c, if any.
  std::vector<IntegerVector> by_pivot(dim);
  std::vector<bool> has(dim, false);
  for (const auto& src : input) {
    if (src.size() != dim) fail(ErrorCode::kDimension, "generator length mismatch");
    IntegerVector v = src;
    for (std::size_t c = leading_column(v); c < dim; c = leading_column(v)) {
      if (!has[c]) {
        if (sgn(v[c]) < 0)
          for (auto& x : v) x = -x;
        by_pivot[c] = std::move(v);
        has[c] = true;
        break;
      }
      IntegerVector& b = by_pivot[c];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(), v[c].get_mpz_t());
      Integer bp = b[c] / g;
      Integer vp = v[c] / g;
      IntegerVector nb(dim), nv(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        nb[j] = s * b[j] + t * v[j];
        nv[j] = bp * v[j] - vp * b[j];
      }
      if (sgn(nb[c]) < 0)
        for (auto& x : nb) x = -x;
      b = std::move(nb);
      v = std::move(nv);
      // Keep entries right of the pivot small to limit growth.
      for (std::size_t j = c + 1; j < dim; ++j) {
        if (!has[j] || sgn(b[j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), b[j].get_mpz_t(), by_pivot[j][j].get_mpz_t());
        if (sgn(q) != 0) axpy(b, -q, by_pivot[j]);
      }
    }
  }
  std::vector<IntegerVector> rows;
  for (std::size_t c = 0; c < dim; ++c)
    if (has[c]) rows.push_back(std::move(by_pivot[c]));
  // Reduce above pivots left to right; a reduction only touches columns at or
  // right of the current pivot.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = leading_column(rows[i]);
    for (std::size_t k = 0; k < i; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[i][c].get_mpz_t());
      if (sgn(q) != 0) axpy(rows[k], -q, rows[i]);
    }
  }
  return rows;
}

ZLattice ZLattice::from_generators(const std::vector<RationalVector>& gens, std::size_t dim) {
  ZLattice out;
  out.dim_ = dim;
  Integer den = 1;
  for (const auto& g : gens) {
    if (g.size() != dim) fail(ErrorCode::kDimension, "generator length mismatch");
    for (const auto& x : g) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<IntegerVector> ints;
  ints.reserve(gens.size());
  for (const auto& g : gens) {
    IntegerVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = g[j].get_num() * (den / g[j].get_den());
    ints.push_back(std::move(v));
  }
  out.den_ = den;
  out.rows_ = hermite_normal_form(ints, dim);
  out.canonicalize();
  return out;
}

ZLattice ZLattice::standard(std::size_t dim) {
  ZLattice out;
  out.dim_ = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    IntegerVector v(dim, 0);
    v[i] = 1;
    out.rows_.push_back(std::move(v));
  }
  return out;
}

void ZLattice::canonicalize() {
  Integer g = den_;
  for (const auto& r : rows_)
    for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    den_ /= g;
    for (auto& r : rows_)
      for (auto& x : r) x /= g;
  }
}

std::vector<RationalVector> ZLattice::basis() const {
  std::vector<RationalVector> out;
  for (const auto& r : rows_) {
    RationalVector v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      v[j] = Rational(r[j], den_);
      v[j].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

Matrix<Rational> ZLattice::basis_matrix() const {
  return Matrix<Rational>::from_rows(basis());
}

bool ZLattice::contains(const RationalVector& v) const {
  if (v.size() != dim_) fail(ErrorCode::kDimension, "vector length mismatch");
  IntegerVector w(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Rational s = v[j] * den_;
    if (s.get_den() != 1) return false;
    w[j] = s.get_num();
  }
  for (const auto& r : rows_) {
    std::size_t c = leading_column(r);
    if (sgn(w[c]) == 0) continue;
    if (!mpz_divisible_p(w[c].get_mpz_t(), r[c].get_mpz_t())) return false;
    Integer q = w[c] / r[c];
    axpy(w, -q, r);
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool ZLattice::contains(const ZLattice& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

ZLattice ZLattice::dual() const {
  if (!full_rank()) fail(ErrorCode::kDimension, "dual of a lattice that is not full rank");
  auto inv = inverse_of(basis_matrix());
  auto t = inv->transposed();
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < t.rows(); ++i) gens.push_back(t.row(i));
  return from_generators(gens, dim_);
}

Rational ZLattice::covolume() const {
  if (!full_rank()) fail(ErrorCode::kDimension, "covolume of a lattice that is not full rank");
  Integer prod = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) prod *= rows_[i][i];
  Rational vol(prod);
  for (std::size_t i = 0; i < dim_; ++i) vol /= den_;
  vol.canonicalize();
  return abs(vol);
}

ZLattice ZLattice::scaled(const Rational& s) const {
  auto b = basis();
  for (auto& v : b)
    for (auto& x : v) x *= s;
  return from_generators(b, dim_);
}

ZLattice operator+(const ZLattice& x, const ZLattice& y) {
  if (x.dim_ != y.dim_) fail(ErrorCode::kDimension, "lattice sum dimension mismatch");
  auto gens = x.basis();
  auto more = y.basis();
  gens.insert(gens.end(), more.begin(), more.end());
  return ZLattice::from_generators(gens, x.dim_);
}

}  // namespace matsplit::exact
