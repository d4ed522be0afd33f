#pragma once

#include <vector>

#include "exactnum/matrix.hpp"
#include "exactnum/rational.hpp"
#include "exactnum/zlattice.hpp"

namespace matsplit::lattice {

using exact::Integer;
using exact::Rational;
using exact::RationalVector;
using IntegerMatrix = exact::Matrix<Integer>;
using RationalMatrix = exact::Matrix<Rational>;

struct LatticeBasis {
  std::vector<RationalVector> vectors;  // basis rows
  IntegerMatrix history;                // vectors = history * input rows

  std::size_t rank() const { return vectors.size(); }
  std::size_t ambient() const { return vectors.empty() ? 0 : vectors[0].size(); }
};

IntegerMatrix identity_integer_matrix(std::size_t n);

// Integral LLL on a positive definite integer Gram matrix. Returns U with
// U * gram * U^T reduced. Throws kDimension if the Gram matrix is singular.
IntegerMatrix lll_gram(const IntegerMatrix& gram, const Rational& delta = Rational(3, 4));

LatticeBasis lll_reduce(const std::vector<RationalVector>& basis, const Rational& delta = Rational(3, 4));

RationalMatrix gram_of(const std::vector<RationalVector>& basis);

// Size reduction |mu_ij| <= 1/2 and the Lovasz condition, checked exactly.
bool is_lll_reduced(const RationalMatrix& gram, const Rational& delta = Rational(3, 4));

// Determinant of the Gram matrix (the squared covolume).
Rational gram_determinant(const RationalMatrix& gram);

// prod ||b_i|| / det L.
long double orthogonality_defect(const RationalMatrix& gram);

// Full rank only: rows of (B^-1)^T, so <b_i, b*_j> = delta_ij.
LatticeBasis dual_basis(const std::vector<RationalVector>& basis);

// Same Z-span.
bool same_lattice(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

bool is_unimodular(const IntegerMatrix& u);

struct ReducedGram {
  IntegerMatrix u;
  RationalMatrix gram;  // u * input * u^T
};

// LLL on a positive definite rational Gram matrix.
ReducedGram reduce_gram(const RationalMatrix& gram);

}  // namespace matsplit::lattice
