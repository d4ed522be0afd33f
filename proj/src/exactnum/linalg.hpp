#pragma once

#include <optional>
#include <vector>

#include "exactnum/matrix.hpp"
#include "exactnum/rational.hpp"
#include "exactnum/scalar.hpp"

namespace matsplit::exact {

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) { return 1 / x; }
};

template <>
struct FieldTraits<Scalar> {
  static Scalar zero_like(const Scalar& x) { return Scalar::zero(x.d()); }
  static Scalar one_like(const Scalar& x) { return Scalar::one(x.d()); }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static Scalar inverse(const Scalar& x) { return x.inverse(); }
};

using ExactMatrix = Matrix<Scalar>;
using ExactVector = std::vector<Scalar>;

// Field descriptor shared by every entry; throws kType on a mix.
std::int64_t field_of(const ExactMatrix& m);

template <class T>
struct Echelon {
  Matrix<T> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  using F = FieldTraits<T>;
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && F::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    T inv = F::inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || F::is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank_of(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

template <class T>
T determinant_of(Matrix<T> m) {
  using F = FieldTraits<T>;
  if (!m.is_square()) fail(ErrorCode::kDimension, "determinant of a non-square matrix");
  if (m.rows() == 0) return T(1);
  T det = F::one_like(m(0, 0));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && F::is_zero(m(p, c))) ++p;
    if (p == m.rows()) return F::zero_like(m(0, 0));
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    T inv = F::inverse(m(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (F::is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Basis of the right null space; empty iff full column rank.
template <class T>
std::vector<std::vector<T>> kernel_of(const Matrix<T>& m) {
  using F = FieldTraits<T>;
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  T zero = m.rows() && m.cols() ? F::zero_like(m(0, 0)) : T();
  T one = m.rows() && m.cols() ? F::one_like(m(0, 0)) : T(1);
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// A particular solution of m x = rhs, or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve_of(const Matrix<T>& m, const std::vector<T>& rhs) {
  using F = FieldTraits<T>;
  if (rhs.size() != m.rows()) fail(ErrorCode::kDimension, "right-hand side length mismatch");
  T zero = m.rows() && m.cols() ? F::zero_like(m(0, 0)) : T();
  Matrix<T> aug(m.rows(), m.cols() + 1, zero);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), zero);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse_of(const Matrix<T>& m) {
  using F = FieldTraits<T>;
  if (!m.is_square()) fail(ErrorCode::kDimension, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return m;
  T zero = F::zero_like(m(0, 0));
  Matrix<T> aug(n, 2 * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F::one_like(m(0, 0));
  }
  auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

// Public operations over Q or K; these enforce a homogeneous field.
std::size_t matrix_rank(const ExactMatrix& m);
Scalar determinant(const ExactMatrix& m);
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);
std::optional<ExactVector> solve_linear(const ExactMatrix& m, const ExactVector& rhs);

ExactMatrix identity_matrix(std::size_t n, std::int64_t d = 0);

}  // namespace matsplit::exact
