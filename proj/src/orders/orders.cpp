#include "orders/orders.hpp"

#include <random>

#include "exactnum/linalg.hpp"
#include "orders/modp.hpp"

namespace matsplit::orders {

using exact::IntegerVector;
using exact::Matrix;

RationalAlgebra::RationalAlgebra(const algebra::StructureConstants& table) {
  auto t = algebra::restrict_to_rationals(table);
  m_ = t.dim();
  gamma_.reserve(t.gamma().size());
  for (const auto& g : t.gamma()) gamma_.push_back(g.a());
  traces_.assign(m_, 0);
  for (std::size_t k = 0; k < m_; ++k)
    for (std::size_t j = 0; j < m_; ++j) traces_[k] += (*this)(k, j, j);
  divisor_ = Rational(static_cast<long>(table.matrix_size()));
  auto id = algebra::find_identity(t);
  for (const auto& x : id) identity_.push_back(x.a());
}

RationalVector RationalAlgebra::multiply(const RationalVector& x, const RationalVector& y) const {
  RationalVector out(m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < m_; ++k) {
        const Rational& g = (*this)(i, j, k);
        if (sgn(g) != 0) out[k] += xy * g;
      }
    }
  }
  return out;
}

Rational RationalAlgebra::reduced_trace(const RationalVector& x) const {
  Rational tr = 0;
  for (std::size_t k = 0; k < m_; ++k) tr += x[k] * traces_[k];
  return tr / divisor_;
}

Order make_order(const RationalAlgebra& alg, const ZLattice& lattice) {
  auto b = lattice.basis();
  const std::size_t m = b.size();
  Matrix<Rational> g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) g(i, j) = g(j, i) = alg.reduced_trace(alg.multiply(b[i], b[j]));
  return Order{lattice, exact::determinant_of(g)};
}

std::string check_order(const RationalAlgebra& alg, const ZLattice& lattice) {
  if (!lattice.full_rank()) return "lattice is not of full rank";
  if (!lattice.contains(alg.identity())) return "lattice does not contain the identity";
  auto b = lattice.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!lattice.contains(alg.multiply(b[i], b[j]))) {
        return "product of basis elements " + std::to_string(i + 1) + " and " +
               std::to_string(j + 1) + " leaves the lattice";
      }
  return {};
}

Order initial_order(const RationalAlgebra& alg) {
  const std::size_t m = alg.dim();
  Integer s = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), alg(i, j, k).get_den_mpz_t());
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector v(m, 0);
    v[i] = s;
    gens.push_back(std::move(v));
  }
  gens.push_back(alg.identity());
  ZLattice lat = ZLattice::from_generators(gens, m);
  // Saturate under multiplication; the scaled basis is already closed, so this
  // settles after one pass.
  for (int iter = 0; iter < 64; ++iter) {
    auto b = lat.basis();
    std::vector<RationalVector> more = b;
    for (const auto& x : b)
      for (const auto& y : b) more.push_back(alg.multiply(x, y));
    ZLattice next = ZLattice::from_generators(more, m);
    if (next == lat) break;
    lat = std::move(next);
  }
  return make_order(alg, lat);
}

Order initial_order(const algebra::StructureConstants& table) {
  return initial_order(RationalAlgebra(table));
}

namespace {

// Structure constants of an order in its own basis.
struct LocalTable {
  std::size_t m = 0;
  std::vector<Integer> c;
  Matrix<Rational> basis;  // rows: order basis in algebra coordinates
  IntegerVector identity;

  const Integer& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * m + j) * m + k];
  }
};

IntegerVector as_integers(const RationalVector& v) {
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) fail(ErrorCode::kInternal, "order is not closed under multiplication");
    out.push_back(x.get_num());
  }
  return out;
}

LocalTable local_table(const RationalAlgebra& alg, const Order& order) {
  LocalTable t;
  t.m = alg.dim();
  t.basis = order.lattice.basis_matrix();
  auto inv = exact::inverse_of(t.basis);
  if (!inv) fail(ErrorCode::kInternal, "order basis is singular");
  Matrix<Rational> to_local = inv->transposed();
  auto b = order.basis();
  t.c.resize(t.m * t.m * t.m);
  for (std::size_t i = 0; i < t.m; ++i)
    for (std::size_t j = 0; j < t.m; ++j) {
      auto coords = as_integers(to_local * alg.multiply(b[i], b[j]));
      for (std::size_t k = 0; k < t.m; ++k) t.c[(i * t.m + j) * t.m + k] = coords[k];
    }
  t.identity = as_integers(to_local * alg.identity());
  return t;
}

ZLattice to_algebra_coords(const LocalTable& t, const ZLattice& local) {
  std::vector<RationalVector> gens;
  Matrix<Rational> bt = t.basis.transposed();
  for (const auto& y : local.basis()) gens.push_back(bt * y);
  return ZLattice::from_generators(gens, t.m);
}

std::uint64_t reduce_mod(const Integer& x, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

using IntMat = std::vector<std::int64_t>;  // m x m, row-major, entries mod P

IntMat mat_mul_mod(const IntMat& a, const IntMat& b, std::size_t m, std::int64_t mod) {
  IntMat out(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      std::int64_t aik = a[i * m + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i * m + j] = (out[i * m + j] + aik * b[k * m + j]) % mod;
    }
  return out;
}

// Basis (reduced echelon) of the radical of Lambda / p Lambda.
ModRows radical_mod_p(const LocalTable& t, std::uint64_t p) {
  const std::size_t m = t.m;
  PrimeField f(p);
  if (p > m) {
    // Dickson: the radical is the kernel of the trace form.
    ModVector tau(m, 0);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) tau[k] = f.add(tau[k], reduce_mod(t(k, j, j), p));
    ModRows form(m, ModVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          form[i][j] = f.add(form[i][j], f.mul(reduce_mod(t(i, j, k), p), tau[k]));
    return mod_row_reduce(f, mod_kernel(f, form, m), m).rows;
  }
  // Small p: I_i = { x in I_{i-1} : g_i(x y) = 0 for all y }, where
  // g_i(x) = (Tr(L_x^(p^i)) mod p^(i+1)) / p^i on an integral lift.
  ModRows v;
  for (std::size_t i = 0; i < m; ++i) {
    ModVector e(m, 0);
    e[i] = 1;
    v.push_back(std::move(e));
  }
  for (std::uint64_t pi = 1; pi <= m && !v.empty(); pi *= p) {
    const auto mod = static_cast<std::int64_t>(pi * p);
    std::vector<std::int64_t> cm(t.c.size());
    for (std::size_t idx = 0; idx < t.c.size(); ++idx)
      cm[idx] = static_cast<std::int64_t>(reduce_mod(t.c[idx], static_cast<std::uint64_t>(mod)));
    auto g = [&](const std::vector<std::int64_t>& x) -> std::uint64_t {
      IntMat l(m * m, 0);
      for (std::size_t k = 0; k < m; ++k) {
        if (x[k] == 0) continue;
        for (std::size_t col = 0; col < m; ++col)
          for (std::size_t row = 0; row < m; ++row)
            l[row * m + col] = (l[row * m + col] + x[k] * cm[(k * m + col) * m + row]) % mod;
      }
      IntMat acc(m * m, 0);
      for (std::size_t r = 0; r < m; ++r) acc[r * m + r] = 1;
      IntMat base = l;
      for (std::uint64_t e = pi; e; e >>= 1) {
        if (e & 1) acc = mat_mul_mod(acc, base, m, mod);
        if (e > 1) base = mat_mul_mod(base, base, m, mod);
      }
      std::int64_t tr = 0;
      for (std::size_t r = 0; r < m; ++r) tr = (tr + acc[r * m + r]) % mod;
      if (tr % static_cast<std::int64_t>(pi) != 0) {
        fail(ErrorCode::kInternal, "trace of p-power is not divisible as expected");
      }
      return static_cast<std::uint64_t>(tr / static_cast<std::int64_t>(pi)) % p;
    };
    // G[j][s] = g_i(v_s * e_j)
    ModRows gm(m, ModVector(v.size(), 0));
    for (std::size_t s = 0; s < v.size(); ++s) {
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::int64_t> x(m, 0);
        for (std::size_t a = 0; a < m; ++a) {
          if (v[s][a] == 0) continue;
          for (std::size_t k = 0; k < m; ++k)
            x[k] = (x[k] + static_cast<std::int64_t>(v[s][a]) * cm[(a * m + j) * m + k]) % mod;
        }
        gm[j][s] = g(x);
      }
    }
    ModRows coeffs = mod_kernel(f, gm, v.size());
    ModRows next;
    for (const auto& a : coeffs) {
      ModVector w(m, 0);
      for (std::size_t s = 0; s < v.size(); ++s)
        for (std::size_t k = 0; k < m; ++k) w[k] = f.add(w[k], f.mul(a[s], v[s][k]));
      next.push_back(std::move(w));
    }
    v = mod_row_reduce(f, std::move(next), m).rows;
  }
  return v;
}

// p * Z^m + lift(span).
ZLattice ideal_from(const ModRows& span, std::uint64_t p, std::size_t m) {
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m, 0);
    e[i] = Rational(Integer(static_cast<unsigned long>(p)));
    gens.push_back(std::move(e));
  }
  for (const auto& v : span) {
    RationalVector w(m);
    for (std::size_t k = 0; k < m; ++k) w[k] = Rational(Integer(static_cast<unsigned long>(v[k])));
    gens.push_back(std::move(w));
  }
  return ZLattice::from_generators(gens, m);
}

// { x : x I within I } (left) or { x : I x within I } (right), local coordinates.
ZLattice multiplier_order(const LocalTable& t, const ZLattice& ideal, bool left) {
  const std::size_t m = t.m;
  auto u = ideal.basis();
  auto inv = exact::inverse_of(Matrix<Rational>::from_rows(u));
  Matrix<Rational> to_ideal = inv->transposed();
  std::vector<RationalVector> rows;
  for (const auto& uj : u) {
    Matrix<Rational> r(m, m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i) {
        Rational acc = 0;
        for (std::size_t s = 0; s < m; ++s) {
          if (sgn(uj[s]) == 0) continue;
          acc += uj[s] * Rational(left ? t(i, s, k) : t(s, i, k));
        }
        r(k, i) = acc;
      }
    Matrix<Rational> f = to_ideal * r;
    for (std::size_t k = 0; k < m; ++k) rows.push_back(f.row(k));
  }
  return ZLattice::from_generators(rows, m).dual();
}

// Semisimple quotient Q = (Lambda / p Lambda) / rad with its structure constants.
struct Quotient {
  PrimeField f;
  std::size_t m = 0;
  std::size_t q = 0;
  ModRows rad;
  std::vector<std::size_t> rad_pivots;
  std::vector<std::size_t> free_cols;
  std::vector<std::uint64_t> c;  // q^3
  ModVector one;

  ModVector reduce(ModVector v) const {
    for (std::size_t r = 0; r < rad.size(); ++r) {
      std::uint64_t coef = v[rad_pivots[r]];
      if (coef == 0) continue;
      for (std::size_t k = 0; k < m; ++k) v[k] = f.sub(v[k], f.mul(coef, rad[r][k]));
    }
    ModVector out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = v[free_cols[a]];
    return out;
  }

  ModVector mul(const ModVector& x, const ModVector& y) const {
    ModVector out(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < q; ++b) {
        if (y[b] == 0) continue;
        std::uint64_t xy = f.mul(x[a], y[b]);
        for (std::size_t k = 0; k < q; ++k) {
          std::uint64_t g = c[(a * q + b) * q + k];
          if (g) out[k] = f.add(out[k], f.mul(xy, g));
        }
      }
    }
    return out;
  }

  ModVector power(ModVector x, std::uint64_t e) const {
    ModVector acc = one;
    while (e) {
      if (e & 1) acc = mul(acc, x);
      e >>= 1;
      if (e) x = mul(x, x);
    }
    return acc;
  }
};

Quotient make_quotient(const LocalTable& t, std::uint64_t p, const ModRows& rad) {
  Quotient out{PrimeField(p), 0, 0, {}, {}, {}, {}, {}};
  out.m = t.m;
  auto ech = mod_row_reduce(out.f, rad, t.m);
  out.rad = ech.rows;
  out.rad_pivots = ech.pivots;
  std::vector<bool> piv(t.m, false);
  for (auto c : ech.pivots) piv[c] = true;
  for (std::size_t j = 0; j < t.m; ++j)
    if (!piv[j]) out.free_cols.push_back(j);
  out.q = out.free_cols.size();
  out.c.assign(out.q * out.q * out.q, 0);
  for (std::size_t a = 0; a < out.q; ++a)
    for (std::size_t b = 0; b < out.q; ++b) {
      ModVector prod(t.m);
      for (std::size_t k = 0; k < t.m; ++k) prod[k] = reduce_mod(t(out.free_cols[a], out.free_cols[b], k), p);
      auto r = out.reduce(std::move(prod));
      for (std::size_t k = 0; k < out.q; ++k) out.c[(a * out.q + b) * out.q + k] = r[k];
    }
  ModVector one(t.m);
  for (std::size_t k = 0; k < t.m; ++k) one[k] = reduce_mod(t.identity[k], p);
  out.one = out.reduce(std::move(one));
  return out;
}

ModRows span_basis(const PrimeField& f, const ModRows& vs, std::size_t cols) {
  return mod_row_reduce(f, vs, cols).rows;
}

// Primitive central idempotents of the semisimple quotient.
std::vector<ModVector> central_idempotents(const Quotient& qt, std::mt19937_64& rng) {
  const PrimeField& f = qt.f;
  const std::size_t q = qt.q;
  // Center: z with z b = b z for all basis b.
  ModRows eqs;
  for (std::size_t b = 0; b < q; ++b)
    for (std::size_t k = 0; k < q; ++k) {
      ModVector row(q);
      for (std::size_t a = 0; a < q; ++a)
        row[a] = f.sub(qt.c[(a * q + b) * q + k], qt.c[(b * q + a) * q + k]);
      eqs.push_back(std::move(row));
    }
  ModRows center = mod_kernel(f, eqs, q);
  // Frobenius-fixed part: F_p x ... x F_p, one factor per simple component.
  ModRows frob(q, ModVector(center.size(), 0));
  for (std::size_t i = 0; i < center.size(); ++i) {
    auto zp = qt.power(center[i], f.p());
    for (std::size_t k = 0; k < q; ++k) frob[k][i] = f.sub(zp[k], center[i][k]);
  }
  ModRows fixed;
  for (const auto& a : mod_kernel(f, frob, center.size())) {
    ModVector z(q, 0);
    for (std::size_t i = 0; i < center.size(); ++i)
      for (std::size_t k = 0; k < q; ++k) z[k] = f.add(z[k], f.mul(a[i], center[i][k]));
    fixed.push_back(std::move(z));
  }
  std::vector<ModVector> done;
  std::vector<ModVector> todo{qt.one};
  std::uniform_int_distribution<std::uint64_t> pick(0, f.p() - 1);
  while (!todo.empty()) {
    ModVector e = todo.back();
    todo.pop_back();
    ModRows local;
    for (const auto& z : fixed) local.push_back(qt.mul(e, z));
    local = span_basis(f, local, q);
    if (local.size() <= 1) {
      done.push_back(std::move(e));
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < 64 && !split; ++attempt) {
      ModVector z(q, 0);
      for (const auto& b : local) {
        std::uint64_t r = pick(rng);
        for (std::size_t k = 0; k < q; ++k) z[k] = f.add(z[k], f.mul(r, b[k]));
      }
      // Minimal polynomial of z inside e*Z0 (identity e).
      std::vector<ModVector> powers{e};
      ModVector poly;
      for (std::size_t deg = 1; deg <= local.size(); ++deg) {
        powers.push_back(qt.mul(powers.back(), z));
        ModRows cols(q, ModVector(powers.size()));
        for (std::size_t k = 0; k < q; ++k)
          for (std::size_t s = 0; s < powers.size(); ++s) cols[k][s] = powers[s][k];
        auto ker = mod_kernel(f, cols, powers.size());
        if (ker.empty()) continue;
        poly = ker[0];
        std::uint64_t lead = f.inv(poly.back());
        for (auto& x : poly) x = f.mul(x, lead);
        break;
      }
      if (poly.size() <= 2) continue;
      auto roots = split_roots(f, poly, rng);
      if (roots.size() + 1 != poly.size()) continue;
      for (std::size_t s = 0; s < roots.size(); ++s) {
        ModVector idem = e;
        for (std::size_t u = 0; u < roots.size(); ++u) {
          if (u == s) continue;
          ModVector factor = z;
          for (std::size_t k = 0; k < q; ++k) factor[k] = f.sub(factor[k], f.mul(roots[u], e[k]));
          std::uint64_t scale = f.inv(f.sub(roots[s], roots[u]));
          for (auto& x : factor) x = f.mul(x, scale);
          idem = qt.mul(idem, factor);
        }
        todo.push_back(std::move(idem));
      }
      split = true;
    }
    if (!split) fail(ErrorCode::kInternal, "could not split the center of the semisimple quotient");
  }
  return done;
}

}  // namespace

Radical p_radical(const RationalAlgebra& alg, const Order& order, std::uint64_t p) {
  if (p < 2 || mpz_probab_prime_p(Integer(static_cast<unsigned long>(p)).get_mpz_t(), 30) == 0) {
    fail(ErrorCode::kDomain, std::to_string(p) + " is not prime");
  }
  auto t = local_table(alg, order);
  auto rad = radical_mod_p(t, p);
  return Radical{to_algebra_coords(t, ideal_from(rad, p, t.m)), rad.size()};
}

Order enlarge_at_p(const RationalAlgebra& alg, const Order& order, std::uint64_t p) {
  auto t = local_table(alg, order);
  const ZLattice self = ZLattice::standard(t.m);
  auto rad = radical_mod_p(t, p);
  ZLattice rad_ideal = ideal_from(rad, p, t.m);
  auto try_ideal = [&](const ZLattice& ideal) -> std::optional<Order> {
    for (bool left : {true, false}) {
      ZLattice o = multiplier_order(t, ideal, left);
      if (o != self) return make_order(alg, to_algebra_coords(t, o));
    }
    return std::nullopt;
  };
  if (auto o = try_ideal(rad_ideal)) return *o;
  // Hereditary at p: look at the maximal ideals above the radical.
  Quotient qt = make_quotient(t, p, rad);
  std::mt19937_64 rng(p);
  auto idems = central_idempotents(qt, rng);
  if (idems.size() > 1) {
    for (const auto& e : idems) {
      // Kernel of x -> e * (x mod rad).
      ModRows map(qt.q, ModVector(t.m, 0));
      for (std::size_t j = 0; j < t.m; ++j) {
        ModVector unit(t.m, 0);
        unit[j] = 1;
        auto img = qt.mul(e, qt.reduce(std::move(unit)));
        for (std::size_t k = 0; k < qt.q; ++k) map[k][j] = img[k];
      }
      ZLattice ideal = ideal_from(mod_kernel(qt.f, map, t.m), p, t.m);
      if (auto o = try_ideal(ideal)) return *o;
    }
  }
  return order;
}

std::vector<std::pair<Integer, unsigned>> factor_with_budget(const Integer& n_in, std::uint64_t budget) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer n = abs(n_in);
  if (n == 0) fail(ErrorCode::kDomain, "cannot factor zero");
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(Integer(p), e);
  };
  take(2);
  for (unsigned long p = 3; p <= budget; p += 2) {
    if (n == 1) break;
    if (Integer(p) * p > n) break;
    take(p);
  }
  if (n == 1) return out;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out.emplace_back(n, 1);
    return out;
  }
  for (unsigned k = 64; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 &&
        mpz_probab_prime_p(root.get_mpz_t(), 30) != 0) {
      out.emplace_back(root, k);
      return out;
    }
  }
  fail(ErrorCode::kFactoringBudget,
       "cofactor " + n.get_str() + " has no factor below the trial-division budget " +
           std::to_string(budget));
}

Order maximize(const RationalAlgebra& alg, Order order, std::uint64_t factor_budget,
               SaturationTrace* trace) {
  for (;;) {
    if (trace) trace->discriminants.push_back(order.discriminant);
    if (order.discriminant.get_den() != 1) fail(ErrorCode::kInternal, "non-integral discriminant");
    auto factors = factor_with_budget(order.discriminant.get_num(), factor_budget);
    bool grown = false;
    for (const auto& [p, e] : factors) {
      if (e < 2) continue;
      if (!p.fits_ulong_p() || p.get_ui() > (1ULL << 62)) {
        fail(ErrorCode::kFactoringBudget, "prime " + p.get_str() + " is too large");
      }
      Order next = enlarge_at_p(alg, order, p.get_ui());
      if (next != order) {
        order = std::move(next);
        if (trace) ++trace->rounds;
        grown = true;
        break;
      }
    }
    if (!grown) return order;
  }
}

Order maximal_order(const algebra::StructureConstants& table, std::uint64_t factor_budget,
                    SaturationTrace* trace) {
  RationalAlgebra alg(table);
  return maximize(alg, initial_order(alg), factor_budget, trace);
}

}  // namespace matsplit::orders
