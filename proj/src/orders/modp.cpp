#include "orders/modp.hpp"

#include "common/error.hpp"

namespace matsplit::orders {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ModEchelon mod_row_reduce(const PrimeField& f, ModRows m, std::size_t cols) {
  ModEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    std::uint64_t inv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

ModRows mod_kernel(const PrimeField& f, const ModRows& m, std::size_t cols) {
  auto ech = mod_row_reduce(f, m, cols);
  std::vector<bool> pivot(cols, false);
  for (auto c : ech.pivots) pivot[c] = true;
  ModRows out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot[free]) continue;
    ModVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.rows[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

using Poly = ModVector;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const PrimeField& f, Poly a, const Poly& m) {
  trim(a);
  std::uint64_t lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    std::uint64_t q = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(q, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const PrimeField& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return poly_mod(f, std::move(r), m);
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, inv);
  }
  return a;
}

Poly poly_div(const PrimeField& f, Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::uint64_t lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return q;
}

void collect_roots(const PrimeField& f, const Poly& poly, std::mt19937_64& rng,
                   std::vector<std::uint64_t>& out) {
  if (poly.size() <= 1) return;
  if (poly.size() == 2) {
    out.push_back(f.mul(f.neg(poly[0]), f.inv(poly[1])));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, f.p() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    // gcd(poly, (x + a)^((p-1)/2) - 1) splits a product of distinct linears.
    Poly base{pick(rng), 1};
    Poly acc{1};
    std::uint64_t e = (f.p() - 1) / 2;
    Poly b = poly_mod(f, base, poly);
    while (e) {
      if (e & 1) acc = poly_mulmod(f, acc, b, poly);
      b = poly_mulmod(f, b, b, poly);
      e >>= 1;
    }
    if (acc.empty()) acc.push_back(0);
    acc[0] = f.sub(acc[0], 1);
    Poly g = poly_gcd(f, poly, acc);
    if (g.size() > 1 && g.size() < poly.size()) {
      collect_roots(f, g, rng, out);
      collect_roots(f, poly_div(f, poly, g), rng, out);
      return;
    }
  }
  fail(ErrorCode::kInternal, "root splitting over F_p did not converge");
}

}  // namespace

std::vector<std::uint64_t> split_roots(const PrimeField& f, const ModVector& poly,
                                       std::mt19937_64& rng) {
  std::vector<std::uint64_t> roots;
  if (f.p() < 4096) {
    for (std::uint64_t x = 0; x < f.p(); ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
      if (v == 0) roots.push_back(x);
    }
    return roots;
  }
  collect_roots(f, poly, rng, roots);
  return roots;
}

}  // namespace matsplit::orders
