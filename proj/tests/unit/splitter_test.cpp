#include <gtest/gtest.h>

#include <cmath>

#include "exactnum/linalg.hpp"
#include "lattice/constants.hpp"
#include "splitter/splitter.hpp"
#include "tables.hpp"

using namespace matsplit;
using namespace matsplit::splitter;

namespace {

bool hidden_isomorphism_holds(const Instance& inst) {
  const auto& t = inst.table;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      auto prod = algebra::multiply(t, t.unit_vector(i), t.unit_vector(j));
      if (algebra::apply_images(inst.images, prod) != inst.images[i] * inst.images[j]) return false;
    }
  return true;
}

}  // namespace

TEST(Splitter, DynamicBoundUpdate) {
  const long double inf = std::numeric_limits<long double>::infinity();
  EXPECT_NEAR(static_cast<double>(dynamic_bound_update(inf, 1, 1)), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(dynamic_bound_update(inf, std::sqrt(2.0L), 2)), 4.0 / 3, 1e-15);
  EXPECT_EQ(dynamic_bound_update(0.5L, 3, 2), 0.5L);
  EXPECT_THROW(dynamic_bound_update(1, 1, 0), Error);
}

TEST(Splitter, GeneratedInstances) {
  for (std::int64_t d : {0, 1, 3}) {
    auto inst = generate_instance(2, d, 10, 42);
    EXPECT_TRUE(algebra::validate(inst.table).empty());
    EXPECT_TRUE(hidden_isomorphism_holds(inst));
  }
  auto again = generate_instance(2, 0, 10, 42);
  EXPECT_EQ(again.table, generate_instance(2, 0, 10, 42).table);
  EXPECT_THROW(generate_instance(2, 5, 10, 1), Error);
}

TEST(Splitter, StandardMatrixAlgebra) {
  auto r = split_over_Q(algebra::matrix_algebra(2));
  EXPECT_EQ(algebra::ideal_rank(algebra::matrix_algebra(2), r.rank_one_element), 1u);
  EXPECT_NEAR(static_cast<double>(r.stats.norm), 1.0, 1e-20);
  EXPECT_TRUE(algebra::check_witness(algebra::matrix_algebra(2), r.witness).empty());
}

TEST(Splitter, ScrambledInstancesOverQ) {
  for (std::size_t n : {2u, 3u}) {
    auto inst = generate_instance(n, 0, 10, 42);
    auto r = split_over_Q(inst.table);
    EXPECT_EQ(algebra::ideal_rank(inst.table, r.rank_one_element), 1u);
    EXPECT_TRUE(algebra::check_witness(inst.table, r.witness).empty());
    EXPECT_LE(r.stats.norm, lattice::hermite_gamma(n).value + 1e-12L);
  }
}

TEST(Splitter, DeterministicAcrossThreads) {
  auto inst = generate_instance(3, 0, 10, 7);
  SplitConfig one, four;
  four.threads = 4;
  EXPECT_EQ(split(inst.table, one).rank_one_element, split(inst.table, four).rank_one_element);
}

TEST(Splitter, BoxEnginesAgreeWithOrdered) {
  auto inst = generate_instance(2, 0, 10, 3);
  SplitConfig ordered, box, dyn;
  box.engine = dyn.engine = Engine::kBox;
  dyn.dynamic_pruning = true;
  auto a = split(inst.table, ordered);
  auto b = split(inst.table, box);
  auto c = split(inst.table, dyn);
  EXPECT_NEAR(static_cast<double>(a.stats.norm), static_cast<double>(b.stats.norm), 1e-15);
  EXPECT_NEAR(static_cast<double>(a.stats.norm), static_cast<double>(c.stats.norm), 1e-15);
  EXPECT_LT(c.stats.nodes, b.stats.nodes);
}

TEST(Splitter, ImaginaryQuadratic) {
  for (std::int64_t d : {1, 3}) {
    auto inst = generate_instance(2, d, 3, 11);
    auto r = split_imag_quad(inst.table);
    EXPECT_TRUE(algebra::check_witness(inst.table, r.witness).empty());
    EXPECT_GE(r.stats.minimal_class_rank_one, 1u);
    if (d == 3) EXPECT_EQ(r.stats.minimal_class_rank_one, 1u);
  }
}

TEST(Splitter, StandardEisensteinMinimalClassAllRankOne) {
  SplitConfig cfg;
  cfg.audit_minimal_class = true;
  auto t = algebra::matrix_algebra(2, 3);
  auto r = split_imag_quad(t, cfg);
  EXPECT_GT(r.stats.minimal_class_size, 0u);
  EXPECT_EQ(r.stats.minimal_class_rank_one, r.stats.minimal_class_size);
}

TEST(Splitter, PromiseViolation) {
  try {
    split_over_Q(matsplit::testing::quaternion_table(-1, -1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPromiseViolated);
  }
}

TEST(Splitter, RejectsUnsupportedInputs) {
  EXPECT_THROW(split_over_Q(algebra::matrix_algebra(2, 1)), Error);
  EXPECT_THROW(split_imag_quad(algebra::matrix_algebra(2)), Error);
  SplitConfig box;
  box.engine = Engine::kBox;
  EXPECT_THROW(split(algebra::matrix_algebra(2, 1), box), Error);
}
