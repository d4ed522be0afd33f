#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exactnum/surd.hpp"

namespace matsplit::lattice {

using exact::Rational;
using exact::Surd;

struct HermiteConstant {
  std::size_t n = 0;
  long double value = 0;   // gamma_n, or an upper bound when not exact
  bool exact = false;
  Rational nth_power;      // gamma_n^n when exact
  std::string symbolic;    // "2*sqrt(3)/3", "2^(1/3)", ...
};

// Exact for n in {1, ..., 8, 24}; otherwise the bound (4/3)^((n-1)/2).
HermiteConstant hermite_gamma(std::size_t n);

// gamma_n^2 as an exact rational when available (n in {1, 2, 4, 8, 24}).
std::optional<Rational> hermite_gamma_squared_exact(std::size_t n);
long double hermite_gamma_squared(std::size_t n);

// Upper bound on the Berge-Martinet constant; defaults to the Hermite value.
long double berge_martinet_upper(std::size_t n);

struct ExactOrApprox {
  long double value = 0;
  std::optional<Surd> surd;
  std::string symbolic() const;
};

// gamma_m^(m/2) (3/2)^m 2^(m(m-1)/2).
ExactOrApprox c_m(std::size_t m);

// sqrt(r / gamma_r^2).
ExactOrApprox rank_norm_floor(std::size_t r);

struct MinRankFloor {
  std::size_t argmin = 0;
  ExactOrApprox ratio;  // min over 2 <= r <= rmax of r / gamma_r^2
  ExactOrApprox floor;  // its square root
};

MinRankFloor min_rank_floor(std::size_t rmax);

// floor(c * v_norm / ||b_i||) per coordinate.
std::vector<long> lenstra_coefficient_bounds(long double c, long double v_norm,
                                             const std::vector<long double>& basis_norms);

}  // namespace matsplit::lattice
