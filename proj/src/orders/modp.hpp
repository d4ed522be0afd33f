#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace matsplit::orders {

// Arithmetic in F_p for p < 2^62.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
};

using ModVector = std::vector<std::uint64_t>;
using ModRows = std::vector<ModVector>;

struct ModEchelon {
  ModRows rows;                      // reduced row echelon, nonzero rows only
  std::vector<std::size_t> pivots;
};

ModEchelon mod_row_reduce(const PrimeField& f, ModRows rows, std::size_t cols);
// Basis of { x : M x = 0 } for M given by rows with `cols` columns.
ModRows mod_kernel(const PrimeField& f, const ModRows& m, std::size_t cols);

// Distinct roots in F_p of a monic polynomial that splits into distinct
// linear factors; coefficients low degree first.
std::vector<std::uint64_t> split_roots(const PrimeField& f, const ModVector& poly,
                                       std::mt19937_64& rng);

}  // namespace matsplit::orders
