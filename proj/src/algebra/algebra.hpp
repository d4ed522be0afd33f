#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactnum/linalg.hpp"
#include "exactnum/scalar.hpp"

namespace matsplit::algebra {

using exact::ExactMatrix;
using exact::Rational;
using exact::Scalar;

// Coordinates in the basis a_1..a_m.
using Element = std::vector<Scalar>;

// Multiplication table gamma[i][j][k] with a_i a_j = sum_k gamma_ijk a_k over
// Q (d == 0) or Q(sqrt(-d)).
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(std::int64_t d, std::size_t dim);
  StructureConstants(std::int64_t d, std::size_t dim, std::vector<Scalar> gamma);

  std::int64_t field() const { return d_; }
  std::size_t dim() const { return dim_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }

  // n with n^2 = dim; throws kInput when dim is not a perfect square.
  std::size_t matrix_size() const;

  Element zero() const { return Element(dim_, Scalar::zero(d_)); }
  Element unit_vector(std::size_t i) const;

  const std::vector<Scalar>& gamma() const { return gamma_; }

  friend bool operator==(const StructureConstants& x, const StructureConstants& y) {
    return x.d_ == y.d_ && x.dim_ == y.dim_ && x.gamma_ == y.gamma_;
  }

 private:
  std::int64_t d_ = 0;
  std::size_t dim_ = 0;
  std::vector<Scalar> gamma_;
};

struct Violation {
  enum class Kind { kFieldMismatch, kNotSquare, kAssociativity, kNoIdentity };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

// Checks field homogeneity, square dimension, all m^3 associativity
// identities, and existence of a two-sided identity. Violations are returned.
std::vector<Violation> validate(const StructureConstants& table, std::size_t max_reported = 16);

Element multiply(const StructureConstants& table, const Element& x, const Element& y);
Element find_identity(const StructureConstants& table);

// Matrix of y -> x*y (left) and y -> y*x (right) in the a-basis.
ExactMatrix left_regular(const StructureConstants& table, const Element& x);
ExactMatrix right_regular(const StructureConstants& table, const Element& x);

// dim_K(C*A)/n; equals the matrix rank of C under any isomorphism A -> M_n(K).
std::size_t ideal_rank(const StructureConstants& table, const Element& c, std::size_t n);
std::size_t ideal_rank(const StructureConstants& table, const Element& c);

struct IsomorphismWitness {
  Element rank_one_element;
  std::vector<Element> left_ideal_basis;  // n elements spanning A*C
  std::vector<ExactMatrix> images;        // phi(a_i), n x n over the base field
};

IsomorphismWitness build_isomorphism(const StructureConstants& table, const Element& c);

// Exact check of multiplicativity on every basis pair and phi(1) = I.
// Returns an empty string on success, otherwise a description of the failure.
std::string check_witness(const StructureConstants& table, const IsomorphismWitness& w);

// [Tr(left_regular(b_i b_j))]
ExactMatrix trace_gram(const StructureConstants& table, const std::vector<Element>& basis);

// Restriction of scalars for d > 0: the 2m-dimensional Q-algebra on the basis
// a_1..a_m, sqrt(-d) a_1..sqrt(-d) a_m. Identity for d == 0.
StructureConstants restrict_to_rationals(const StructureConstants& table);
Element from_rational_coords(const std::vector<Rational>& coords, std::int64_t d);
std::vector<Rational> to_rational_coords(const Element& x);

// The standard table of M_n(K) on the matrix units E_11, E_12, ..., E_nn.
StructureConstants matrix_algebra(std::size_t n, std::int64_t d = 0);

// Table on a new basis b_i = sum_j change(i, j) a_j; change must be invertible.
StructureConstants change_basis(const StructureConstants& table, const ExactMatrix& change);

// Image of an element under a family of basis images: sum_i x_i M_i.
ExactMatrix apply_images(const std::vector<ExactMatrix>& images, const Element& x);

}  // namespace matsplit::algebra
