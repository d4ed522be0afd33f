#include "exactnum/linalg.hpp"

namespace matsplit::exact {

std::int64_t field_of(const ExactMatrix& m) {
  if (m.data().empty()) return 0;
  std::int64_t d = m.data().front().d();
  for (const auto& x : m.data()) {
    if (x.d() != d) {
      fail(ErrorCode::kType, "matrix mixes fields d=" + std::to_string(d) + " and d=" +
                                 std::to_string(x.d()));
    }
  }
  return d;
}

std::size_t matrix_rank(const ExactMatrix& m) {
  field_of(m);
  return rank_of(m);
}

Scalar determinant(const ExactMatrix& m) {
  field_of(m);
  return determinant_of(m);
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  field_of(m);
  return kernel_of(m);
}

std::optional<ExactVector> solve_linear(const ExactMatrix& m, const ExactVector& rhs) {
  std::int64_t d = field_of(m);
  for (const auto& x : rhs) {
    if (x.d() != d) fail(ErrorCode::kType, "right-hand side over a different field");
  }
  return solve_of(m, rhs);
}

ExactMatrix identity_matrix(std::size_t n, std::int64_t d) {
  ExactMatrix m(n, n, Scalar::zero(d));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(d);
  return m;
}

}  // namespace matsplit::exact
