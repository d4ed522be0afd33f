#pragma once

#include <cstdint>
#include <vector>

#include "algebra/algebra.hpp"
#include "embed/bigfloat.hpp"
#include "orders/orders.hpp"

namespace matsplit::embed {

using exact::Rational;
using exact::RationalVector;

// phi: A -> M_n(R) over Q, or A -> M_n(C) over Q(sqrt(-d)) with sqrt(-d) -> i sqrt(d).
struct Embedding {
  std::size_t n = 0;
  std::int64_t d = 0;
  unsigned precision_bits = 0;
  std::vector<ComplexMatrix> images;  // phi(a_k); imaginary parts vanish over Q
  Real residual;                      // max multiplicativity / unitality defect
  Real error_radius;
  algebra::Element splitting_element;  // the z whose eigenspace gave the module
};

constexpr unsigned kMinPrecisionBits = 64;

// Random z in the order with squarefree minimal polynomial of degree n; the
// kernel of y -> y z - lambda y is an n-dimensional left ideal on which A acts.
// Values are created at `precision_bits`; callers hold a PrecisionScope.
Embedding split_numeric(const algebra::StructureConstants& table, const orders::Order& order,
                        unsigned precision_bits, std::uint64_t seed, unsigned max_attempts = 64);

ComplexMatrix image_of(const Embedding& e, const algebra::Element& x);
// Coordinates over Q of the restriction of scalars (length m, or 2m over K).
ComplexMatrix image_of_rational(const Embedding& e, const RationalVector& coords);

// Row-major entries; over K the real parts followed by the imaginary parts.
std::vector<Real> vectorize(const ComplexMatrix& m, bool complex_field);

struct EmbeddedLattice {
  std::size_t dim = 0;
  std::vector<std::vector<Real>> vectors;  // one per order basis element
  RealMatrix gram;
  Real error_radius;
};

EmbeddedLattice embed_order(const Embedding& e, const orders::Order& order);
EmbeddedLattice embed_vectors(std::vector<std::vector<Real>> vectors, Real error_radius);

struct RationalizedBasis {
  std::vector<RationalVector> vectors;
  exact::Integer denominator;
  Real perturbation;  // bound on the absolute error of each entry
};

RationalizedBasis rationalize(const EmbeddedLattice& lattice, const exact::Integer& target_denominator);

}  // namespace matsplit::embed
