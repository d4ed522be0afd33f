#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra/algebra.hpp"
#include "orders/orders.hpp"

namespace matsplit::splitter {

using algebra::Element;
using algebra::StructureConstants;
using exact::Rational;

enum class Engine { kOrdered, kBox };

struct SplitConfig {
  std::uint64_t seed = 1;
  unsigned precision_bits = 128;
  unsigned max_precision_bits = 4096;
  std::uint64_t factor_budget = orders::kDefaultFactorBudget;
  std::uint64_t enumeration_budget = 200000000;
  Engine engine = Engine::kOrdered;
  bool dynamic_pruning = false;
  unsigned threads = 1;
  // Rank-test every minimal vector over K, not only until the first rank-one hit.
  bool audit_minimal_class = false;
  // Search this lattice (rational coordinates) instead of a maximal order.
  std::optional<exact::ZLattice> lattice;
};

struct SplitStats {
  std::uint64_t nodes = 0;
  std::uint64_t rank_tests = 0;
  unsigned precision_bits = 0;
  unsigned precision_attempts = 0;
  std::vector<Rational> discriminants;
  std::size_t saturation_rounds = 0;
  long double norm = 0;              // Frobenius norm of the image of the result
  long double norm_bound = 0;        // bound the search was run with
  long double orthogonality_defect = 0;
  bool bound_doubled = false;
  std::size_t minimal_class_size = 0;  // imaginary quadratic path only
  std::size_t minimal_class_rank_one = 0;
  double wall_seconds = 0;
  std::string engine;
};

struct SplitResult {
  Element rank_one_element;
  algebra::IsomorphismWitness witness;
  SplitStats stats;
};

// Dispatches on the field of the table.
SplitResult split(const StructureConstants& table, const SplitConfig& config = {});
SplitResult split_over_Q(const StructureConstants& table, const SplitConfig& config = {});
SplitResult split_imag_quad(const StructureConstants& table, const SplitConfig& config = {});

// min(d, gamma_r^2 / sqrt(r) * norm).
long double dynamic_bound_update(long double d_current, long double norm, std::size_t rank);

struct Instance {
  StructureConstants table;
  exact::ExactMatrix change;                 // rows: new basis in matrix units
  std::vector<exact::ExactMatrix> images;    // hidden isomorphism on the new basis
};

// Random invertible base change of M_n(K) with entries a + b*omega, |a|, |b| <= height.
Instance generate_instance(std::size_t n, std::int64_t d, long height, std::uint64_t seed);

}  // namespace matsplit::splitter
