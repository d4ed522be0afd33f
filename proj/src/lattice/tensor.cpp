#include "lattice/tensor.hpp"

#include <cmath>

#include "exactnum/linalg.hpp"
#include "lattice/constants.hpp"

namespace matsplit::lattice {

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

LatticeBasis tensor_product(const std::vector<RationalVector>& l, const std::vector<RationalVector>& m) {
  LatticeBasis out;
  for (const auto& x : l)
    for (const auto& y : m) {
      RationalVector v;
      v.reserve(x.size() * y.size());
      for (const auto& a : x)
        for (const auto& b : y) v.push_back(a * b);
      out.vectors.push_back(std::move(v));
    }
  out.history = identity_integer_matrix(out.vectors.size());
  return out;
}


Rational lambda1_squared(const RationalMatrix& gram) {
  ReducedGram r = reduce_gram(gram);
  Rational best = r.gram(0, 0);
  for (std::size_t i = 1; i < gram.rows(); ++i) best = std::min(best, r.gram(i, i));
  auto found = enumerate_short(to_real_gram(r.gram), std::sqrt(exact::to_long_double(best)) * (1 + 1e-9L));
  for (const auto& v : found.vectors) best = std::min(best, exact_quadratic_form(r.gram, v.coeffs));
  return best;
}

std::size_t tensor_matrix_rank(const Coefficients& coeffs, std::size_t rank_l, std::size_t rank_m) {
  if (coeffs.size() != rank_l * rank_m) fail(ErrorCode::kDimension, "tensor coefficient length mismatch");
  RationalMatrix c(rank_l, rank_m, Rational(0));
  for (std::size_t i = 0; i < rank_l; ++i)
    for (std::size_t j = 0; j < rank_m; ++j) c(i, j) = coeffs[i * rank_m + j];
  return exact::rank_of(c);
}

TensorExperimentReport min_norm_by_matrix_rank(const RationalMatrix& gram_l, const RationalMatrix& gram_m,
                                               long double norm_bound, const EnumerationOptions& options) {
  TensorExperimentReport rep;
  rep.rank_l = gram_l.rows();
  rep.rank_m = gram_m.rows();
  RationalMatrix g = kronecker(gram_l, gram_m);
  ReducedGram r = reduce_gram(g);
  auto found = enumerate_short(to_real_gram(r.gram), norm_bound, options);
  rep.nodes = found.nodes;
  struct Item {
    Coefficients coeffs;
    Rational norm2;
    std::size_t rank;
  };
  std::vector<Item> items;
  const long double bound2 = norm_bound * norm_bound * (1 + options.relative_slack);
  for (const auto& v : found.vectors) {
    Rational n2 = exact_quadratic_form(r.gram, v.coeffs);
    if (exact::to_long_double(n2) > bound2) continue;
    Coefficients c = coefficients_in_input(r.u, v.coeffs);
    // Canonical sign in the original coordinates.
    for (long x : c) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : c) y = -y;
      break;
    }
    items.push_back({c, n2, tensor_matrix_rank(c, rep.rank_l, rep.rank_m)});
  }
  if (items.empty()) fail(ErrorCode::kEnumerationExhausted, "norm bound lies below the minimum of L (x) M");
  rep.enumerated = items.size();
  rep.lambda1_squared = items[0].norm2;
  for (const auto& it : items) rep.lambda1_squared = std::min(rep.lambda1_squared, it.norm2);
  for (const auto& it : items) {
    auto [pos, fresh] = rep.min_by_rank.try_emplace(it.rank, TensorRankMinimum{it.norm2, it.coeffs, 0});
    auto& entry = pos->second;
    if (it.norm2 < entry.norm2 || (it.norm2 == entry.norm2 && !fresh && it.coeffs < entry.example)) {
      if (it.norm2 < entry.norm2) entry.count = 0;
      entry.norm2 = it.norm2;
      entry.example = it.coeffs;
    }
    if (it.norm2 == entry.norm2) ++entry.count;
    if (it.norm2 == rep.lambda1_squared) {
      ++rep.lambda1_count;
      if (it.rank != 1) rep.lambda1_all_rank_one = false;
    }
    // Floor: norm^2 >= (r / gamma_r^2) lambda_1^2.
    bool violated;
    long double floor2;
    if (auto g2 = hermite_gamma_squared_exact(it.rank)) {
      Rational f = Rational(static_cast<long>(it.rank)) / *g2 * rep.lambda1_squared;
      violated = it.norm2 < f;
      floor2 = exact::to_long_double(f);
    } else {
      floor2 = static_cast<long double>(it.rank) / hermite_gamma_squared(it.rank) *
               exact::to_long_double(rep.lambda1_squared);
      violated = exact::to_long_double(it.norm2) < floor2 * (1 - 1e-12L);
    }
    if (violated) rep.floor_violations.push_back({it.rank, it.norm2, floor2});
  }
  return rep;
}

TraceProductCheck trace_product_check(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
    fail(ErrorCode::kDimension, "trace inequality needs two square matrices of equal size");
  const std::size_t n = a.rows();
  Rational tr = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) tr += a(i, k) * b(k, i);
  Rational det = exact::determinant_of(a) * exact::determinant_of(b);
  if (sgn(det) <= 0) fail(ErrorCode::kDomain, "matrices must be positive definite");
  Rational lhs = 1, rhs = det;
  for (std::size_t i = 0; i < n; ++i) {
    lhs *= tr;
    rhs *= static_cast<long>(n);
  }
  TraceProductCheck out;
  out.holds = sgn(tr) > 0 && lhs >= rhs;
  out.lhs = exact::to_long_double(tr);
  out.rhs = static_cast<long double>(n) * std::pow(exact::to_long_double(det), 1.0L / static_cast<long double>(n));
  return out;
}

}  // namespace matsplit::lattice
