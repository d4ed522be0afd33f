#include <gtest/gtest.h>

#include <random>

#include "orders/modp.hpp"
#include "orders/orders.hpp"
#include "tables.hpp"

using namespace matsplit;
using namespace matsplit::orders;
using algebra::matrix_algebra;
using exact::Scalar;
using matsplit::testing::quaternion_table;
using matsplit::testing::rational_matrix;

namespace {

// Z*I + 2*M_2(Z), presented on the basis I, 2E12, 2E21, 2E22.
algebra::StructureConstants suborder_table() {
  return algebra::change_basis(matrix_algebra(2),
                               rational_matrix({{1, 0, 0, 1}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
}

algebra::StructureConstants scrambled(std::size_t n, unsigned seed, std::int64_t d = 0) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> h(-3, 3);
  for (;;) {
    exact::ExactMatrix t(n * n, n * n, Scalar::zero(d));
    for (std::size_t i = 0; i < n * n; ++i)
      for (std::size_t j = 0; j < n * n; ++j) t(i, j) = Scalar(h(rng), d ? h(rng) : 0, d);
    if (!exact::determinant(t).is_zero()) return algebra::change_basis(matrix_algebra(n, d), t);
  }
}

void expect_valid_order(const RationalAlgebra& alg, const Order& o) {
  EXPECT_EQ(check_order(alg, o.lattice), "");
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  PrimeField f(101);
  EXPECT_EQ(f.mul(f.inv(37), 37), 1u);
  EXPECT_EQ(f.pow(3, 100), 1u);
  EXPECT_EQ(f.sub(3, 5), 99u);
}

TEST(ModLinalg, KernelDimension) {
  PrimeField f(2);
  ModRows m{{1, 1, 0}, {0, 1, 1}};
  auto k = mod_kernel(f, m, 3);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (ModVector{1, 1, 1}));
}

TEST(SplitRoots, SmallAndLargePrimes) {
  std::mt19937_64 rng(1);
  for (std::uint64_t p : {7ull, 1000003ull, 2305843009213693951ull}) {
    PrimeField f(p);
    // (x - 2)(x - 5)(x - 6)
    ModVector poly{f.neg(60 % p), 52 % p, f.neg(13 % p), 1};
    auto roots = split_roots(f, poly, rng);
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(roots, (std::vector<std::uint64_t>{2, 5, 6})) << "p=" << p;
  }
}

TEST(InitialOrder, StandardTable) {
  RationalAlgebra alg(matrix_algebra(2));
  Order o = initial_order(alg);
  EXPECT_EQ(o.lattice, exact::ZLattice::standard(4));
  EXPECT_EQ(abs(o.discriminant), 1);
}

TEST(InitialOrder, DenominatorsAreCleared) {
  auto change = exact::identity_matrix(4);
  change(0, 0) = Scalar(exact::make_rational(1, 2));
  auto t = algebra::change_basis(matrix_algebra(2), change);
  // b_1 = E_11 / 2, so b_1 * b_1 = b_1 / 2.
  EXPECT_EQ(t(0, 0, 0), Scalar(exact::make_rational(1, 2)));
  RationalAlgebra alg(t);
  Order o = initial_order(alg);
  expect_valid_order(alg, o);
}

TEST(InitialOrder, LipschitzQuaternions) {
  RationalAlgebra alg(quaternion_table(-1, -1));
  Order o = initial_order(alg);
  EXPECT_EQ(o.lattice, exact::ZLattice::standard(4));
  expect_valid_order(alg, o);
}

TEST(PRadical, MatrixOrderIsSemisimple) {
  RationalAlgebra alg(matrix_algebra(2));
  Order o = initial_order(alg);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(p_radical(alg, o, p).dimension, 0u);
}

TEST(PRadical, SuborderAtTwo) {
  auto t = suborder_table();
  RationalAlgebra alg(t);
  Order o = initial_order(alg);
  auto rad = p_radical(alg, o, 2);
  EXPECT_EQ(rad.dimension, 3u);
  // In algebra coordinates (b = I, 2E12, 2E21, 2E22) the radical ideal is 2*M_2(Z).
  auto expected = exact::ZLattice::from_generators(
      {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
  EXPECT_EQ(rad.ideal, expected);
  EXPECT_THROW(p_radical(alg, o, 4), Error);
}

TEST(PRadical, OneDimensionalAlgebra) {
  algebra::StructureConstants t(0, 1);
  t(0, 0, 0) = Scalar(1);
  RationalAlgebra alg(t);
  Order o = initial_order(alg);
  EXPECT_EQ(p_radical(alg, o, 2).dimension, 0u);
  EXPECT_EQ(p_radical(alg, o, 3).dimension, 0u);
}

TEST(EnlargeAtP, MaximalOrderUnchanged) {
  RationalAlgebra alg(matrix_algebra(2));
  Order o = initial_order(alg);
  EXPECT_EQ(enlarge_at_p(alg, o, 2), o);
}

TEST(EnlargeAtP, SuborderGrows) {
  RationalAlgebra alg(suborder_table());
  Order o = initial_order(alg);
  Order bigger = enlarge_at_p(alg, o, 2);
  EXPECT_NE(bigger, o);
  EXPECT_TRUE(bigger.lattice.contains(o.lattice));
  expect_valid_order(alg, bigger);
  EXPECT_LT(abs(bigger.discriminant), abs(o.discriminant));
  Rational ratio = o.discriminant / bigger.discriminant;
  EXPECT_EQ(ratio.get_den(), 1);
}

TEST(MaximalOrder, SuborderSaturates) {
  SaturationTrace trace;
  Order o = maximal_order(suborder_table(), kDefaultFactorBudget, &trace);
  EXPECT_EQ(abs(o.discriminant), 1);
  EXPECT_LE(trace.rounds, 3u);
  for (std::size_t i = 1; i < trace.discriminants.size(); ++i)
    EXPECT_LT(abs(trace.discriminants[i]), abs(trace.discriminants[i - 1]));
}

TEST(MaximalOrder, ScrambledInstances) {
  for (unsigned seed = 1; seed <= 4; ++seed) {
    for (std::size_t n : {2u, 3u}) {
      auto t = scrambled(n, seed);
      RationalAlgebra alg(t);
      Order o = maximal_order(t);
      expect_valid_order(alg, o);
      EXPECT_EQ(abs(o.discriminant), 1) << "n=" << n << " seed=" << seed;
      EXPECT_EQ(maximize(alg, o), o);
    }
  }
}

TEST(MaximalOrder, HereditaryOrderIsNotAFixpoint) {
  // Eichler order [[Z, Z], [2Z, Z]] on the basis E11, E12, 2E21, E22.
  auto t = algebra::change_basis(matrix_algebra(2), rational_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}));
  RationalAlgebra alg(t);
  Order o = initial_order(alg);
  EXPECT_EQ(abs(o.discriminant), 4);
  EXPECT_EQ(abs(maximal_order(t).discriminant), 1);
}

TEST(MaximalOrder, HamiltonQuaternionsStayRamified) {
  auto t = quaternion_table(-1, -1);
  Order o = maximal_order(t);
  // The Hurwitz order has reduced discriminant 2, so |det| = 4.
  EXPECT_EQ(abs(o.discriminant), 4);
}

TEST(MaximalOrder, ImaginaryQuadraticFields) {
  for (std::int64_t d : {1, 3}) {
    auto t = scrambled(2, 7, d);
    RationalAlgebra alg(t);
    Order o = maximal_order(t);
    expect_valid_order(alg, o);
    // M_2(O_K) restricted to Z has |disc| = D^4.
    Rational expected = d == 1 ? 256 : 81;
    EXPECT_EQ(abs(o.discriminant), expected) << "d=" << d;
  }
}

TEST(FactorWithBudget, Cases) {
  auto f = factor_with_budget(Integer(360), 100);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], std::make_pair(Integer(2), 3u));
  EXPECT_EQ(f[2], std::make_pair(Integer(5), 1u));
  Integer big("1000000007");
  auto g = factor_with_budget(big * big * 12, 100);
  EXPECT_EQ(g.back(), std::make_pair(big, 2u));
  EXPECT_THROW(factor_with_budget(Integer(1000003) * Integer(1000033), 1000), Error);
}
