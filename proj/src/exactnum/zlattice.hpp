#pragma once

#include <vector>

#include "exactnum/matrix.hpp"
#include "exactnum/rational.hpp"

namespace matsplit::exact {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Row echelon Hermite normal form of an integer row lattice. Rows with a
// positive pivot, strictly increasing pivot columns, entries above each pivot
// reduced into [0, pivot).
std::vector<IntegerVector> hermite_normal_form(const std::vector<IntegerVector>& rows,
                                               std::size_t dim);

// A Z-lattice in Q^dim, stored canonically as (1/den) * HNF rows.
class ZLattice {
 public:
  ZLattice() = default;
  static ZLattice from_generators(const std::vector<RationalVector>& gens, std::size_t dim);
  static ZLattice standard(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rows_.size() == dim_; }

  std::vector<RationalVector> basis() const;
  Matrix<Rational> basis_matrix() const;

  bool contains(const RationalVector& v) const;
  bool contains(const ZLattice& other) const;

  // Full rank only: { y : <x, y> in Z for all x }.
  ZLattice dual() const;
  // Full rank only: |det| of a basis.
  Rational covolume() const;

  ZLattice scaled(const Rational& s) const;

  friend ZLattice operator+(const ZLattice& x, const ZLattice& y);
  friend bool operator==(const ZLattice& x, const ZLattice& y) {
    return x.dim_ == y.dim_ && x.den_ == y.den_ && x.rows_ == y.rows_;
  }
  friend bool operator!=(const ZLattice& x, const ZLattice& y) { return !(x == y); }

 private:
  void canonicalize();

  std::size_t dim_ = 0;
  Integer den_ = 1;
  std::vector<IntegerVector> rows_;
};

}  // namespace matsplit::exact
