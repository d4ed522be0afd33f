#include <gtest/gtest.h>

#include <random>

#include "embed/embed.hpp"
#include "tables.hpp"

using namespace matsplit;
using namespace matsplit::embed;
using algebra::matrix_algebra;
using exact::Scalar;
using matsplit::testing::quaternion_table;

namespace {

algebra::StructureConstants scrambled_m2(std::int64_t d) {
  exact::ExactMatrix t(4, 4, Scalar::zero(d));
  long entries[4][4] = {{1, 2, 0, -1}, {0, 1, 3, 1}, {2, 0, 1, 1}, {1, -1, 1, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = Scalar(entries[i][j], d ? (i + j) % 2 : 0, d);
  return algebra::change_basis(matrix_algebra(2, d), t);
}

Real max_residual(const algebra::StructureConstants& t, const Embedding& e) {
  Real worst(0);
  const std::size_t m = t.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ComplexMatrix lhs = e.images[i] * e.images[j];
      algebra::Element col(m, Scalar::zero(t.field()));
      for (std::size_t k = 0; k < m; ++k) col[k] = t(i, j, k);
      ComplexMatrix rhs = image_of(e, col);
      for (std::size_t r = 0; r < lhs.data().size(); ++r)
        worst = std::max(worst, abs(lhs.data()[r] - rhs.data()[r]));
    }
  return worst;
}

}  // namespace

TEST(SplitNumeric, StandardTable) {
  PrecisionScope scope(128);
  auto t = matrix_algebra(2);
  auto o = orders::initial_order(t);
  auto e = split_numeric(t, o, 128, 1);
  EXPECT_LT(e.residual, Real("1e-30"));
  EXPECT_LT(max_residual(t, e), Real("1e-30"));
  ComplexMatrix one = image_of(e, algebra::find_identity(t));
  EXPECT_LT(abs(one(0, 0) - Complex(Real(1))), Real("1e-30"));
  EXPECT_LT(abs(one(0, 1)), Real("1e-30"));
}

TEST(SplitNumeric, SplitQuaternionsAndM3) {
  PrecisionScope scope(128);
  for (const auto& t : {quaternion_table(1, 1), matrix_algebra(3), scrambled_m2(0)}) {
    auto o = orders::maximal_order(t);
    auto e = split_numeric(t, o, 128, 5);
    EXPECT_LT(max_residual(t, e), e.error_radius * 16 + Real("1e-30"));
    EXPECT_LE(e.residual, e.error_radius);
  }
}

TEST(SplitNumeric, ImaginaryQuadraticFields) {
  PrecisionScope scope(160);
  for (std::int64_t d : {1, 3}) {
    auto t = scrambled_m2(d);
    auto o = orders::maximal_order(t);
    auto e = split_numeric(t, o, 160, 3);
    EXPECT_LT(max_residual(t, e), Real("1e-35"));
  }
}

TEST(SplitNumeric, RejectsLowPrecision) {
  auto t = matrix_algebra(2);
  EXPECT_THROW(split_numeric(t, orders::initial_order(t), 32, 1), Error);
}

TEST(SplitNumeric, HamiltonQuaternionsHaveNoRealEmbedding) {
  PrecisionScope scope(128);
  auto t = quaternion_table(-1, -1);
  EXPECT_THROW(split_numeric(t, orders::initial_order(t), 128, 1, 8), Error);
}

TEST(SplitNumeric, DoublingPrecisionShrinksErrorRadius) {
  auto t = scrambled_m2(0);
  auto o = orders::maximal_order(t);
  Real low, high;
  {
    PrecisionScope scope(128);
    low = split_numeric(t, o, 128, 9).error_radius;
  }
  {
    PrecisionScope scope(256);
    high = split_numeric(t, o, 256, 9).error_radius;
  }
  EXPECT_LE(high * 2, low);
}

TEST(EmbedOrder, StandardEmbeddingIsOrthonormal) {
  PrecisionScope scope(128);
  auto t = matrix_algebra(2);
  Embedding e;
  e.n = 2;
  for (std::size_t k = 0; k < 4; ++k) {
    ComplexMatrix m(2, 2);
    m(k / 2, k % 2) = Complex(Real(1));
    e.images.push_back(m);
  }
  e.error_radius = 0;
  auto lat = embed_order(e, orders::initial_order(t));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(lat.gram(i, j), Real(i == j ? 1 : 0));
}

TEST(EmbedOrder, GramDeterminantIsConjugationInvariant) {
  PrecisionScope scope(128);
  auto t = scrambled_m2(0);
  auto o = orders::maximal_order(t);
  auto lat = embed_order(split_numeric(t, o, 128, 2), o);
  // Gaussian elimination on the Gram matrix.
  RealMatrix g = lat.gram;
  Real det(1);
  for (std::size_t c = 0; c < 4; ++c) {
    det *= g(c, c);
    for (std::size_t r = c + 1; r < 4; ++r) {
      Real f = g(r, c) / g(c, c);
      for (std::size_t k = c; k < 4; ++k) g(r, k) -= f * g(c, k);
    }
  }
  EXPECT_LT(abs(det - 1), Real("1e-25"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(lat.gram(i, j), lat.gram(j, i));
}

TEST(EmbedOrder, NormTransportOverGaussianField) {
  PrecisionScope scope(128);
  auto t = scrambled_m2(1);
  auto o = orders::maximal_order(t);
  auto e = split_numeric(t, o, 128, 4);
  auto basis = o.basis();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> h(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    exact::RationalVector y(8, 0);
    for (const auto& b : basis) {
      int c = h(rng);
      for (std::size_t k = 0; k < 8; ++k) y[k] += c * b[k];
    }
    ComplexMatrix img = image_of_rational(e, y);
    Real fro(0);
    for (const auto& x : img.data()) fro += abs2(x);
    Real phi(0);
    for (const auto& x : vectorize(img, true)) phi += x * x;
    EXPECT_LE(abs(fro - phi), fro * Real("1e-35"));
  }
}

TEST(Rationalize, RoundingContract) {
  PrecisionScope scope(128);
  Real pi = boost::math::constants::pi<Real>();
  auto lat = embed_vectors({{pi, Real(2)}}, Real(0));
  auto r = rationalize(lat, exact::Integer(1000000));
  EXPECT_LE(abs(to_real(r.vectors[0][0]) - pi), Real("1e-6"));
  EXPECT_EQ(r.vectors[0][1], 2);
  auto ints = rationalize(embed_vectors({{Real(3), Real(-1)}}, Real(0)), exact::Integer(7));
  EXPECT_EQ(ints.vectors[0][0], 3);
  EXPECT_EQ(ints.vectors[0][1], -1);
}
