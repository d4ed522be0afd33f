#pragma once

#include <map>
#include <vector>

#include "lattice/enumerate.hpp"
#include "lattice/lll.hpp"

namespace matsplit::lattice {

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

// Basis x_i (x) y_j, index i * rank(M) + j.
LatticeBasis tensor_product(const std::vector<RationalVector>& l, const std::vector<RationalVector>& m);

// Exact lambda_1^2 of a lattice given by a rational Gram matrix.
Rational lambda1_squared(const RationalMatrix& gram);

// Rank of the rank(L) x rank(M) coefficient matrix.
std::size_t tensor_matrix_rank(const Coefficients& coeffs, std::size_t rank_l, std::size_t rank_m);

struct TensorRankMinimum {
  Rational norm2;
  Coefficients example;  // coefficients in the x_i (x) y_j basis
  std::size_t count = 0;  // +-pairs attaining the minimum
};

struct FloorViolation {
  std::size_t rank = 0;
  Rational norm2;
  long double floor2 = 0;  // (r / gamma_r^2) lambda_1^2
};

struct TensorExperimentReport {
  std::size_t rank_l = 0, rank_m = 0;
  Rational lambda1_squared;
  std::map<std::size_t, TensorRankMinimum> min_by_rank;
  std::vector<FloorViolation> floor_violations;
  std::size_t lambda1_count = 0;
  bool lambda1_all_rank_one = true;
  std::size_t enumerated = 0;
  std::uint64_t nodes = 0;
};

// Classifies every tensor of L (x) M with norm <= norm_bound by matrix rank.
// Throws kEnumerationExhausted when the bound lies below lambda_1.
TensorExperimentReport min_norm_by_matrix_rank(const RationalMatrix& gram_l, const RationalMatrix& gram_m,
                                               long double norm_bound,
                                               const EnumerationOptions& options = {});

struct TraceProductCheck {
  bool holds = false;
  long double lhs = 0;  // Tr(AB)
  long double rhs = 0;  // n (det A det B)^(1/n)
};

// Tr(AB) >= n (det A det B)^(1/n), decided exactly as Tr(AB)^n >= n^n det A det B.
TraceProductCheck trace_product_check(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace matsplit::lattice
