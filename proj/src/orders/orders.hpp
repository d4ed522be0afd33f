#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algebra/algebra.hpp"
#include "exactnum/zlattice.hpp"

namespace matsplit::orders {

using exact::Integer;
using exact::Rational;
using exact::RationalVector;
using exact::ZLattice;

// Q-algebra given by rational structure constants. For input over Q(sqrt(-d))
// this is the restriction of scalars, of dimension 2m.
class RationalAlgebra {
 public:
  explicit RationalAlgebra(const algebra::StructureConstants& table);

  std::size_t dim() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * m_ + j) * m_ + k];
  }
  RationalVector multiply(const RationalVector& x, const RationalVector& y) const;
  const RationalVector& identity() const { return identity_; }
  // Reduced trace Tr(left_regular(x)) / n, n the matrix size over the base field.
  Rational reduced_trace(const RationalVector& x) const;

 private:
  std::size_t m_ = 0;
  std::vector<Rational> gamma_;
  RationalVector traces_;
  Rational divisor_ = 1;
  RationalVector identity_;
};

struct Order {
  ZLattice lattice;        // coordinates in the algebra basis
  Rational discriminant;   // det of the reduced trace form on a lattice basis

  std::vector<RationalVector> basis() const { return lattice.basis(); }
  friend bool operator==(const Order& x, const Order& y) { return x.lattice == y.lattice; }
  friend bool operator!=(const Order& x, const Order& y) { return !(x == y); }
};

Order make_order(const RationalAlgebra& alg, const ZLattice& lattice);

// Empty when the lattice is a full-rank, unital, multiplicatively closed
// lattice; otherwise the first defect found.
std::string check_order(const RationalAlgebra& alg, const ZLattice& lattice);

Order initial_order(const RationalAlgebra& alg);
Order initial_order(const algebra::StructureConstants& table);

struct Radical {
  ZLattice ideal;        // p*Lambda + preimage of rad(Lambda / p Lambda)
  std::size_t dimension = 0;  // F_p-dimension of the radical
};

Radical p_radical(const RationalAlgebra& alg, const Order& order, std::uint64_t p);

// An order containing `order`, strictly larger iff `order` is not p-maximal.
Order enlarge_at_p(const RationalAlgebra& alg, const Order& order, std::uint64_t p);

struct SaturationTrace {
  std::vector<Rational> discriminants;  // one entry per order visited
  std::size_t rounds = 0;               // successful enlargements
};

constexpr std::uint64_t kDefaultFactorBudget = 1000000;

Order maximize(const RationalAlgebra& alg, Order order,
               std::uint64_t factor_budget = kDefaultFactorBudget,
               SaturationTrace* trace = nullptr);
Order maximal_order(const algebra::StructureConstants& table,
                    std::uint64_t factor_budget = kDefaultFactorBudget,
                    SaturationTrace* trace = nullptr);

// Prime factorization by trial division up to `budget`; a leftover cofactor
// is accepted only if it is a probable prime or a perfect power of one.
std::vector<std::pair<Integer, unsigned>> factor_with_budget(const Integer& n, std::uint64_t budget);

}  // namespace matsplit::orders
