#include "lattice/constants.hpp"

#include <cmath>

#include "common/error.hpp"

namespace matsplit::lattice {

using exact::Integer;

namespace {

std::optional<Rational> exact_nth_power(std::size_t n) {
  switch (n) {
    case 1: return Rational(1);
    case 2: return Rational(4, 3);
    case 3: return Rational(2);
    case 4: return Rational(4);
    case 5: return Rational(8);
    case 6: return Rational(64, 3);
    case 7: return Rational(64);
    case 8: return Rational(256);
    case 24: {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 4, 24);
      return Rational(p);
    }
    default: return std::nullopt;
  }
}

bool perfect_power(const Integer& x, unsigned k, Integer& root) {
  if (x < 0) return false;
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) != 0;
}

// x^(1/k) in simplest radical form.
std::string root_symbol(const Rational& x, std::size_t k) {
  for (std::size_t j = k; j >= 1; --j) {
    if (k % j != 0) continue;
    Integer num, den;
    if (!perfect_power(x.get_num(), static_cast<unsigned>(j), num) ||
        !perfect_power(x.get_den(), static_cast<unsigned>(j), den)) {
      continue;
    }
    Rational base(num, den);
    std::size_t index = k / j;
    if (index == 1) return exact::to_string(base);
    if (index == 2) return Surd::sqrt_of(base).symbolic();
    std::string b = exact::to_string(base);
    if (base.get_den() != 1) b = "(" + b + ")";
    return b + "^(1/" + std::to_string(index) + ")";
  }
  return exact::to_string(x);
}

Integer power_of_two(std::size_t e) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

}  // namespace

HermiteConstant hermite_gamma(std::size_t n) {
  if (n == 0) fail(ErrorCode::kDomain, "Hermite constant needs n >= 1");
  HermiteConstant h;
  h.n = n;
  if (auto p = exact_nth_power(n)) {
    h.exact = true;
    h.nth_power = *p;
    h.value = std::pow(exact::to_long_double(*p), 1.0L / static_cast<long double>(n));
    h.symbolic = root_symbol(*p, n);
  } else {
    h.value = std::pow(4.0L / 3.0L, (static_cast<long double>(n) - 1) / 2);
    h.symbolic = "(4/3)^(" + std::to_string(n - 1) + "/2)";
  }
  return h;
}

std::optional<Rational> hermite_gamma_squared_exact(std::size_t n) {
  auto p = exact_nth_power(n);
  if (!p) return std::nullopt;
  // gamma^2 = p^(2/n) is rational iff p is a perfect (n/2)-th power (or n <= 2).
  if (n == 1) return Rational(1);
  if (n == 2) return *p;
  if (n % 2 != 0) return std::nullopt;
  Integer num, den;
  auto k = static_cast<unsigned>(n / 2);
  if (perfect_power(p->get_num(), k, num) && perfect_power(p->get_den(), k, den)) return Rational(num) / Rational(den);
  return std::nullopt;
}

long double hermite_gamma_squared(std::size_t n) {
  long double g = hermite_gamma(n).value;
  return g * g;
}

long double berge_martinet_upper(std::size_t n) { return hermite_gamma(n).value; }

std::string ExactOrApprox::symbolic() const {
  if (surd) return surd->symbolic();
  return {};
}

ExactOrApprox c_m(std::size_t m) {
  if (m == 0) fail(ErrorCode::kDomain, "c_m needs m >= 1");
  HermiteConstant h = hermite_gamma(m);
  const auto md = static_cast<long double>(m);
  ExactOrApprox out;
  out.value = std::pow(h.value, md / 2) * std::pow(1.5L, md) * std::pow(2.0L, md * (md - 1) / 2);
  if (h.exact) {
    Integer three_m, two_m;
    mpz_ui_pow_ui(three_m.get_mpz_t(), 3, m);
    Rational scale(three_m * power_of_two(m * (m - 1) / 2), power_of_two(m));
    scale.canonicalize();
    out.surd = Surd::sqrt_of(h.nth_power) * Surd(scale);
    out.value = out.surd->value();
  }
  return out;
}

ExactOrApprox rank_norm_floor(std::size_t r) {
  if (r == 0) fail(ErrorCode::kDomain, "rank must be positive");
  ExactOrApprox out;
  out.value = std::sqrt(static_cast<long double>(r) / hermite_gamma_squared(r));
  if (auto g2 = hermite_gamma_squared_exact(r)) {
    out.surd = Surd::sqrt_of(Rational(static_cast<long>(r)) / *g2);
    out.value = out.surd->value();
  }
  return out;
}

MinRankFloor min_rank_floor(std::size_t rmax) {
  if (rmax < 2) fail(ErrorCode::kDomain, "the minimum runs over 2 <= r <= rmax, so rmax >= 2");
  MinRankFloor best;
  long double best_ratio = 0;
  for (std::size_t r = 2; r <= rmax; ++r) {
    long double ratio = static_cast<long double>(r) / hermite_gamma_squared(r);
    if (best.argmin == 0 || ratio < best_ratio - 1e-15L) {
      best.argmin = r;
      best_ratio = ratio;
    }
  }
  best.ratio.value = best_ratio;
  best.floor.value = std::sqrt(best_ratio);
  if (auto g2 = hermite_gamma_squared_exact(best.argmin)) {
    Rational ratio = Rational(static_cast<long>(best.argmin)) / *g2;
    best.ratio.surd = Surd(ratio);
    best.floor.surd = Surd::sqrt_of(ratio);
  }
  return best;
}

std::vector<long> lenstra_coefficient_bounds(long double c, long double v_norm,
                                             const std::vector<long double>& basis_norms) {
  if (c <= 0 || v_norm < 0) fail(ErrorCode::kDomain, "Lenstra bound needs c > 0 and a nonnegative norm");
  std::vector<long> out;
  for (long double b : basis_norms) {
    if (b <= 0) fail(ErrorCode::kDomain, "basis vectors must be nonzero");
    out.push_back(static_cast<long>(std::floor(c * v_norm / b)));
  }
  return out;
}

}  // namespace matsplit::lattice
