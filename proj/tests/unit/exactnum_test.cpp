#include <gtest/gtest.h>

#include <random>

#include "exactnum/linalg.hpp"
#include "exactnum/zlattice.hpp"
#include "tables.hpp"

using namespace matsplit;
using namespace matsplit::exact;
using matsplit::testing::rational_matrix;

namespace {

ExactMatrix d5_matrix() {
  ExactMatrix m(2, 2, Scalar::zero(5));
  m(0, 0) = Scalar(3, 0, 5);
  m(0, 1) = Scalar(1, 1, 5);
  m(1, 0) = Scalar(1, -1, 5);
  m(1, 1) = Scalar(2, 0, 5);
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
}

TEST(Rational, Rounding) {
  EXPECT_EQ(floor(make_rational(-3, 2)), -2);
  EXPECT_EQ(ceil(make_rational(-3, 2)), -1);
  EXPECT_EQ(round_nearest(make_rational(5, 2)), 3);
  EXPECT_EQ(round_nearest(make_rational(-5, 2)), -2);
  EXPECT_EQ(round_nearest(make_rational(7, 3)), 2);
}

TEST(Scalar, FieldArithmetic) {
  Scalar i = Scalar::root(1);
  EXPECT_EQ(i * i, Scalar(-1, 0, 1));
  Scalar w(make_rational(-1, 2), make_rational(1, 2), 3);  // primitive cube root of unity
  EXPECT_EQ(w * w * w, Scalar::one(3));
  Scalar z(3, 4, 1);
  EXPECT_EQ(z * z.inverse(), Scalar::one(1));
  EXPECT_EQ(z.norm(), 25);
  EXPECT_THROW(Scalar::root(1) * Scalar::root(3), Error);
}

TEST(Scalar, Integrality) {
  EXPECT_TRUE(Scalar(make_rational(1, 2), make_rational(1, 2), 3).is_integral());
  EXPECT_FALSE(Scalar(make_rational(1, 2), 0, 3).is_integral());
  EXPECT_FALSE(Scalar(make_rational(1, 2), make_rational(1, 2), 1).is_integral());
  EXPECT_TRUE(Scalar(2, -5, 1).is_integral());
  EXPECT_TRUE(Scalar(make_rational(3, 2), make_rational(-1, 2), 7).is_integral());
}

TEST(MatrixRank, Examples) {
  EXPECT_EQ(matrix_rank(identity_matrix(2)), 2u);
  EXPECT_EQ(matrix_rank(rational_matrix({{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(matrix_rank(d5_matrix()), 1u);
}

TEST(MatrixRank, HeterogeneousFieldsRejected) {
  ExactMatrix m = identity_matrix(2, 1);
  m(0, 1) = Scalar::root(3);
  EXPECT_THROW(matrix_rank(m), Error);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(identity_matrix(3)), Scalar(1));
  EXPECT_TRUE(determinant(d5_matrix()).is_zero());
  EXPECT_EQ(determinant(rational_matrix({{2, 0}, {0, 3}})), Scalar(6));
  EXPECT_THROW(determinant(rational_matrix({{1, 2, 3}})), Error);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(identity_matrix(3)).empty());
  auto k = kernel_basis(rational_matrix({{1, -1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], k[0][1]);
  EXPECT_FALSE(k[0][0].is_zero());
  auto k5 = kernel_basis(d5_matrix());
  ASSERT_EQ(k5.size(), 1u);
  auto image = d5_matrix() * k5[0];
  for (const auto& x : image) EXPECT_TRUE(x.is_zero());
}

TEST(Solve, Examples) {
  auto e1 = std::vector<Scalar>{1, 0};
  EXPECT_EQ(*solve_linear(identity_matrix(2), e1), e1);
  auto x = solve_linear(rational_matrix({{1, 1}}), {Scalar(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + (*x)[1], Scalar(2));
  EXPECT_FALSE(solve_linear(rational_matrix({{1, 1}, {1, 1}}), {Scalar(1), Scalar(2)}));
}

TEST(Linalg, RankNullityAndInverse) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t d = trial % 3 == 0 ? 0 : (trial % 3 == 1 ? 1 : 3);
    std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    ExactMatrix m(rows, cols, Scalar::zero(d));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = Scalar(coef(rng) * (trial % 5 == 0 ? 0 : 1) + (i == j), d ? coef(rng) : 0, d);
    EXPECT_EQ(matrix_rank(m) + kernel_basis(m).size(), cols);
    if (rows == cols) {
      bool invertible = !determinant(m).is_zero();
      EXPECT_EQ(invertible, matrix_rank(m) == rows);
      if (invertible) {
        auto inv = inverse_of(m);
        ASSERT_TRUE(inv);
        EXPECT_EQ(m * *inv, identity_matrix(rows, d));
      }
    }
  }
}

TEST(ZLattice, HermiteFormAndMembership) {
  auto lat = ZLattice::from_generators({{4, 6}, {2, 2}}, 2);
  EXPECT_EQ(lat.covolume(), 4);
  EXPECT_TRUE(lat.contains(RationalVector{2, 2}));
  EXPECT_TRUE(lat.contains(RationalVector{0, 2}));
  EXPECT_FALSE(lat.contains(RationalVector{1, 1}));
  auto half = ZLattice::from_generators({{make_rational(1, 2), 0}, {0, 1}}, 2);
  EXPECT_TRUE(half.contains(ZLattice::standard(2)));
  EXPECT_FALSE(ZLattice::standard(2).contains(half));
  EXPECT_EQ(half.dual(), ZLattice::from_generators({{2, 0}, {0, 1}}, 2));
  EXPECT_EQ(lat.dual().dual(), lat);
  EXPECT_EQ(lat + ZLattice::standard(2), ZLattice::standard(2));
}

TEST(ZLattice, CanonicalFormIsBasisIndependent) {
  auto a = ZLattice::from_generators({{1, 2, 3}, {0, 1, 4}, {0, 0, 5}}, 3);
  auto b = ZLattice::from_generators({{1, 3, 7}, {0, 1, 4}, {2, 4, 11}, {0, 0, 5}}, 3);
  EXPECT_EQ(a, b);
}
