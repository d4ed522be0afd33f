#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "embed/bigfloat.hpp"
#include "exactnum/scalar.hpp"
#include "exactnum/surd.hpp"
#include "lattice/enumerate.hpp"
#include "lattice/lll.hpp"
#include "lattice/tensor.hpp"

namespace matsplit::quadfield {

using exact::Rational;
using exact::Scalar;
using exact::Surd;
using lattice::RationalMatrix;

struct FieldData {
  std::int64_t d = 1;
  std::int64_t discriminant = 4;  // D = d if d = 3 mod 4, else 4d
  bool half_integral = false;     // (1 + sqrt(-d))/2 lies in O_K
  bool euclidean = false;         // d in {1, 2, 3, 7, 11}
};

// Throws kDomain unless d is a squarefree positive integer.
FieldData field_data(std::int64_t d);

// Second element of the integral basis {1, omega}.
Scalar omega(std::int64_t d);

// Covering radius of O_K in C.
Surd kappa(std::int64_t d);
long tau(std::int64_t d);

struct NearestPoint {
  Scalar alpha;
  embed::Real distance;
};

NearestPoint nearest_ok(const embed::Complex& z, std::int64_t d);

struct HermitianLattice {
  FieldData field;
  std::array<std::array<Scalar, 2>, 2> generators;
  std::array<std::array<Scalar, 2>, 2> gram;  // h(g_i, g_j) = sum_k g_ik conj(g_jk)
};

// Throws kDimension if the generators are dependent over K, kDomain if an entry leaves O_K.
HermitianLattice make_hermitian_lattice(std::int64_t d, const std::array<std::array<Scalar, 2>, 2>& generators);

Rational hermitian_determinant(const HermitianLattice& m);

// Gram matrix of the rank-4 Z-lattice on g1, omega g1, g2, omega g2 under Re h.
RationalMatrix realization_gram(const HermitianLattice& m);

struct GammaH {
  Surd value;        // ||v||^2 / sqrt(det M)
  Rational min_norm2;
  Rational det;
};

GammaH gamma_h(const HermitianLattice& m);

// sqrt(D/2).
Surd gamma_h_upper(std::int64_t d);
// tau / sqrt(1 - kappa^2); throws kDomain when kappa >= 1.
Surd gamma_h_kappa_upper(std::int64_t d);
// gamma_h_upper(d)^2 / 2.
Rational r_lambda_upper(std::int64_t d);

using RankFn = std::function<std::size_t(const lattice::Coefficients&)>;

struct RLambda {
  Rational rank1_norm2;
  Rational rank2_norm2;
  long double ratio = 0;  // rank1_norm2 / rank2_norm2
  long double bound = 0;  // r_lambda_upper(d)
};

// Shortest rank-1 and rank-2 elements of a lattice of 2 x 2 matrices given by
// its Gram matrix; rank is decided by the callback on input coordinates.
RLambda empirical_r_lambda(const RationalMatrix& gram, const RankFn& rank, std::int64_t d,
                           const lattice::EnumerationOptions& options = {});

}  // namespace matsplit::quadfield
