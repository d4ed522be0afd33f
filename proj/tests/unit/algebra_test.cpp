#include <gtest/gtest.h>

#include <random>

#include "algebra/algebra.hpp"
#include "tables.hpp"

using namespace matsplit;
using namespace matsplit::algebra;
using exact::Scalar;
using matsplit::testing::quaternion_table;
using matsplit::testing::rational_matrix;

namespace {

Element coords(std::initializer_list<long> xs, std::int64_t d = 0) {
  Element e;
  for (long x : xs) e.push_back(Scalar(x, 0, d));
  return e;
}

ExactMatrix random_change(std::size_t m, std::int64_t d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> h(-4, 4);
  for (;;) {
    ExactMatrix t(m, m, Scalar::zero(d));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t(i, j) = Scalar(h(rng), d ? h(rng) : 0, d);
    if (!exact::determinant(t).is_zero()) return t;
  }
}

}  // namespace

TEST(Validate, StandardTableIsValid) {
  EXPECT_TRUE(validate(matrix_algebra(2)).empty());
  EXPECT_TRUE(validate(matrix_algebra(3)).empty());
  EXPECT_TRUE(validate(matrix_algebra(2, 1)).empty());
}

TEST(Validate, PerturbationBreaksAssociativity) {
  auto t = matrix_algebra(2);
  t(0, 1, 0) += Scalar(1);
  auto v = validate(t);
  ASSERT_FALSE(v.empty());
  bool assoc = false;
  for (const auto& x : v) assoc |= x.kind == Violation::Kind::kAssociativity;
  EXPECT_TRUE(assoc);
}

TEST(Validate, SplitQuaternionsAreValid) {
  EXPECT_TRUE(validate(quaternion_table(1, 1)).empty());
  EXPECT_TRUE(validate(quaternion_table(-1, -1)).empty());
}

TEST(Validate, NonSquareDimension) {
  StructureConstants t(0, 2);
  t(0, 0, 0) = t(0, 1, 1) = t(1, 0, 1) = Scalar(1);
  auto v = validate(t);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, Violation::Kind::kNotSquare);
}

TEST(Multiply, MatrixUnits) {
  auto t = matrix_algebra(2);
  EXPECT_EQ(multiply(t, t.unit_vector(1), t.unit_vector(2)), t.unit_vector(0));
  EXPECT_EQ(multiply(t, t.unit_vector(1), t.unit_vector(1)), t.zero());
  Element x = coords({3, -1, 2, 5});
  EXPECT_EQ(multiply(t, find_identity(t), x), x);
  EXPECT_THROW(multiply(t, coords({1, 2}), x), Error);
}

TEST(Multiply, AssociativeOnRandomTriples) {
  auto t = change_basis(matrix_algebra(2), random_change(4, 0, 3));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> h(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Element x, y, z;
    for (int i = 0; i < 4; ++i) {
      x.emplace_back(h(rng));
      y.emplace_back(h(rng));
      z.emplace_back(h(rng));
    }
    EXPECT_EQ(multiply(t, multiply(t, x, y), z), multiply(t, x, multiply(t, y, z)));
  }
}

TEST(FindIdentity, Examples) {
  EXPECT_EQ(find_identity(matrix_algebra(2)), coords({1, 0, 0, 1}));
  EXPECT_EQ(find_identity(quaternion_table(-1, -1)), coords({1, 0, 0, 0}));
  auto t = change_basis(matrix_algebra(2), random_change(4, 0, 5));
  Element e = find_identity(t);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(multiply(t, e, t.unit_vector(i)), t.unit_vector(i));
    EXPECT_EQ(multiply(t, t.unit_vector(i), e), t.unit_vector(i));
  }
}

TEST(FindIdentity, MissingIdentityIsReported) {
  StructureConstants t(0, 4);
  t(0, 0, 0) = Scalar(1);
  EXPECT_THROW(find_identity(t), Error);
  auto v = validate(t);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.back().kind, Violation::Kind::kNoIdentity);
}

TEST(LeftRegular, Examples) {
  auto t = matrix_algebra(2);
  EXPECT_EQ(left_regular(t, find_identity(t)), exact::identity_matrix(4));
  EXPECT_EQ(exact::matrix_rank(left_regular(t, t.unit_vector(0))), 2u);
  EXPECT_EQ(exact::matrix_rank(left_regular(t, t.zero())), 0u);
}

TEST(IdealRank, Examples) {
  auto t = matrix_algebra(2);
  EXPECT_EQ(ideal_rank(t, find_identity(t)), 2u);
  EXPECT_EQ(ideal_rank(t, t.unit_vector(0)), 1u);
  EXPECT_EQ(ideal_rank(t, t.zero()), 0u);
}

TEST(IdealRank, MatchesMatrixRankUnderKnownIsomorphism) {
  // Rows of the change matrix are the images of the new basis in M_3.
  auto change = random_change(9, 0, 17);
  auto t = change_basis(matrix_algebra(3), change);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> h(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Element x;
    for (int i = 0; i < 9; ++i) x.emplace_back(trial % 4 == 0 && i > 2 ? 0 : h(rng));
    exact::ExactVector image = change.transposed() * x;
    ExactMatrix mat(3, 3);
    for (int i = 0; i < 9; ++i) mat(i / 3, i % 3) = image[i];
    EXPECT_EQ(ideal_rank(t, x), exact::matrix_rank(mat));
  }
}

TEST(IdealRank, DivisionAlgebraCanViolatePromise) {
  // Q x Q x Q x Q is not M_2(Q); an idempotent spans a 1-dimensional ideal.
  StructureConstants t(0, 4);
  for (std::size_t i = 0; i < 4; ++i) t(i, i, i) = Scalar(1);
  EXPECT_THROW(ideal_rank(t, t.unit_vector(0)), Error);
}

TEST(BuildIsomorphism, StandardTable) {
  auto t = matrix_algebra(2);
  auto w = build_isomorphism(t, t.unit_vector(0));
  EXPECT_EQ(check_witness(t, w), "");
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(exact::matrix_rank(w.images[i]), 1u);
  EXPECT_THROW(build_isomorphism(t, find_identity(t)), Error);
}

TEST(BuildIsomorphism, ScrambledInstances) {
  for (unsigned n : {2u, 3u}) {
    auto change = random_change(n * n, 0, 42 + n);
    auto t = change_basis(matrix_algebra(n), change);
    // Preimage of E_11: solve change^T x = e_1.
    exact::ExactVector e1(n * n, Scalar(0));
    e1[0] = Scalar(1);
    auto x = exact::solve_linear(change.transposed(), e1);
    ASSERT_TRUE(x);
    auto w = build_isomorphism(t, *x);
    EXPECT_EQ(check_witness(t, w), "");
  }
}

TEST(BuildIsomorphism, GaussianField) {
  auto t = change_basis(matrix_algebra(2, 1), random_change(4, 1, 9));
  exact::ExactVector e1(4, Scalar::zero(1));
  e1[0] = Scalar::one(1);
  auto change = random_change(4, 1, 9);
  auto x = exact::solve_linear(change.transposed(), e1);
  ASSERT_TRUE(x);
  EXPECT_EQ(ideal_rank(t, *x), 1u);
  EXPECT_EQ(check_witness(t, build_isomorphism(t, *x)), "");
}

TEST(CheckWitness, DetectsCorruption) {
  auto t = matrix_algebra(2);
  auto w = build_isomorphism(t, t.unit_vector(0));
  w.images[1](0, 0) += Scalar(1);
  EXPECT_NE(check_witness(t, w), "");
}

TEST(TraceGram, Examples) {
  auto t = matrix_algebra(2);
  std::vector<Element> basis;
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(t.unit_vector(i));
  auto g = trace_gram(t, basis);
  // Tr(L_x) = 2 tr(x): Gram is twice the permutation E_ij <-> E_ji.
  EXPECT_EQ(g, rational_matrix({{2, 0, 0, 0}, {0, 0, 2, 0}, {0, 2, 0, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(exact::determinant(g), Scalar(-16));
  for (auto& b : basis)
    for (auto& x : b) x = x * Scalar(2);
  auto g2 = trace_gram(t, basis);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g2(i, j), g(i, j) * Scalar(4));
  StructureConstants one(0, 1);
  one(0, 0, 0) = Scalar(1);
  EXPECT_EQ(trace_gram(one, {one.unit_vector(0)}), rational_matrix({{1}}));
}

TEST(RestrictToRationals, PreservesAssociativityAndIdentity) {
  auto t = change_basis(matrix_algebra(2, 3), random_change(4, 3, 21));
  auto r = restrict_to_rationals(t);
  EXPECT_EQ(r.dim(), 8u);
  EXPECT_EQ(validate(r, 1).size(), 1u);  // dimension 8 is not square, nothing else
  auto e = find_identity(t);
  auto er = find_identity(r);
  EXPECT_EQ(from_rational_coords(to_rational_coords(er), 0).size(), 8u);
  auto back = from_rational_coords(to_rational_coords(er), 3);
  EXPECT_EQ(back, e);
}
