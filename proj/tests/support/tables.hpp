#pragma once

#include "algebra/algebra.hpp"

namespace matsplit::testing {

// Quaternion algebra on 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k.
inline algebra::StructureConstants quaternion_table(long a, long b) {
  algebra::StructureConstants t(0, 4);
  auto set = [&](int x, int y, int z, long c) { t(x, y, z) = exact::Scalar(c); };
  for (int x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, -a * b);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(1, 3, 2, a);
  set(3, 1, 2, -a);
  set(2, 3, 1, -b);
  set(3, 2, 1, b);
  return t;
}

inline exact::ExactMatrix rational_matrix(const std::vector<std::vector<long>>& rows, std::int64_t d = 0) {
  exact::ExactMatrix m(rows.size(), rows[0].size(), exact::Scalar::zero(d));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = exact::Scalar(rows[i][j], 0, d);
  return m;
}

}  // namespace matsplit::testing
