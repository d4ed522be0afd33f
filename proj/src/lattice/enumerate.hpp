#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "exactnum/matrix.hpp"
#include "exactnum/rational.hpp"

namespace matsplit::lattice {

using exact::Rational;

using RealGram = exact::Matrix<long double>;
using Coefficients = std::vector<long>;

RealGram to_real_gram(const exact::Matrix<exact::Rational>& gram);

long double quadratic_form(const RealGram& gram, const Coefficients& x);

struct ShortVector {
  Coefficients coeffs;
  long double norm2 = 0;  // squared norm
};

struct EnumerationOptions {
  std::uint64_t node_budget = 0;        // 0 means unlimited
  unsigned threads = 1;
  long double relative_slack = 1e-9L;   // keep norm2 <= bound^2 (1 + slack)
};

struct EnumerationResult {
  std::vector<ShortVector> vectors;
  std::uint64_t nodes = 0;
};

// One representative per +-pair of nonzero vectors with norm <= norm_bound
// (first nonzero coefficient positive), sorted by norm; norms within a
// relative 1e-12 form one class, ordered lexicographically.
EnumerationResult enumerate_short(const RealGram& gram, long double norm_bound,
                                  const EnumerationOptions& options = {});

Rational exact_quadratic_form(const exact::Matrix<Rational>& gram, const Coefficients& x);

// Maps coordinates y in the rows of U * B back to coordinates in B, i.e. U^T y.
Coefficients coefficients_in_input(const exact::Matrix<exact::Integer>& u, const Coefficients& y);

// Norm-then-lex order used by every engine.
void sort_norm_then_lex(std::vector<ShortVector>& v);

struct BoxResult {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

// Called on each canonical nonzero vector of the box; may return tightened
// per-coordinate bounds, which apply from then on.
using BoxVisitor = std::function<std::optional<std::vector<long>>(const Coefficients&, long double norm2)>;

// Current squared radius; subtrees whose partial norm exceeds it are cut.
using BoxCap = std::function<long double()>;

// All x with |x_i| <= bounds_i, each coordinate tried in the order 0, 1, -1, 2, -2, ...
BoxResult box_enumerate(const RealGram& gram, std::vector<long> bounds, const BoxVisitor& visit,
                        std::uint64_t node_budget = 0, const BoxCap& cap = {});

}  // namespace matsplit::lattice
