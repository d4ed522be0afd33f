#include "lattice/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "common/error.hpp"

namespace matsplit::lattice {

using exact::Integer;

RealGram to_real_gram(const exact::Matrix<exact::Rational>& gram) {
  RealGram g(gram.rows(), gram.cols(), 0.0L);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) g(i, j) = exact::to_long_double(gram(i, j));
  return g;
}

long double quadratic_form(const RealGram& gram, const Coefficients& x) {
  long double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    long double row = 0;
    for (std::size_t j = 0; j < x.size(); ++j) row += gram(i, j) * x[j];
    s += row * x[i];
  }
  return s;
}

void sort_norm_then_lex(std::vector<ShortVector>& v) {
  std::sort(v.begin(), v.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
    return a.coeffs < b.coeffs;
  });
  std::size_t start = 0;
  while (start < v.size()) {
    std::size_t end = start + 1;
    while (end < v.size() &&
           v[end].norm2 - v[end - 1].norm2 <= 1e-12L * std::max(1.0L, v[end].norm2)) {
      ++end;
    }
    std::sort(v.begin() + static_cast<long>(start), v.begin() + static_cast<long>(end),
              [](const ShortVector& a, const ShortVector& b) { return a.coeffs < b.coeffs; });
    start = end;
  }
}

namespace {

bool canonical_sign(const Coefficients& x) {
  for (long c : x) {
    if (c != 0) return c > 0;
  }
  return false;
}

// Q(x) = sum_i q(i,i) (x_i + sum_{j>i} q(i,j) x_j)^2.
RealGram cholesky_form(const RealGram& g) {
  const std::size_t n = g.rows();
  RealGram q = g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
    if (!(q(i, i) > 0)) fail(ErrorCode::kDomain, "Gram matrix is not positive definite");
  }
  return q;
}

struct FinckePohst {
  const RealGram& gram;
  const RealGram& q;
  long double bound2;
  long double limit2;
  std::uint64_t budget;
  std::atomic<std::uint64_t>& shared_nodes;
  std::uint64_t nodes = 0;
  std::vector<ShortVector> found;
  Coefficients x;

  void count() {
    ++nodes;
    if (budget && (nodes & 1023) == 0) {
      if (shared_nodes.fetch_add(1024) + 1024 > budget) {
        fail(ErrorCode::kEnumerationBudget, "enumeration node budget exhausted");
      }
    }
  }

  void level(std::size_t i, long double remaining) {
    const std::size_t n = x.size();
    long double center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q(i, j) * x[j];
    long double radius = std::sqrt(std::max(0.0L, remaining / q(i, i)));
    auto lo = static_cast<long>(std::ceil(center - radius - 1e-9L));
    auto hi = static_cast<long>(std::floor(center + radius + 1e-9L));
    for (long v = lo; v <= hi; ++v) {
      long double t = v - center;
      long double rest = remaining - q(i, i) * t * t;
      if (rest < -limit2 * 1e-12L) continue;
      count();
      x[i] = v;
      if (i == 0) {
        if (canonical_sign(x)) {
          long double norm2 = quadratic_form(gram, x);
          if (norm2 <= limit2) found.push_back({x, norm2});
        }
      } else {
        level(i - 1, rest);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

EnumerationResult enumerate_short(const RealGram& gram, long double norm_bound,
                                  const EnumerationOptions& options) {
  if (!gram.is_square()) fail(ErrorCode::kDimension, "Gram matrix must be square");
  const std::size_t n = gram.rows();
  EnumerationResult out;
  if (n == 0 || norm_bound <= 0) return out;
  RealGram q = cholesky_form(gram);
  const long double bound2 = norm_bound * norm_bound;
  const long double limit2 = bound2 * (1 + options.relative_slack);
  // Enumerate with a slightly larger radius and filter on the recomputed norm.
  const long double search2 = limit2 * (1 + 1e-9L) + 1e-18L;
  std::atomic<std::uint64_t> shared{0};

  // Top-level values of the last coordinate are split across workers.
  long double radius = std::sqrt(search2 / q(n - 1, n - 1));
  auto top_lo = static_cast<long>(std::ceil(-radius - 1e-9L));
  auto top_hi = static_cast<long>(std::floor(radius + 1e-9L));
  std::vector<long> tops;
  for (long v = top_lo; v <= top_hi; ++v) tops.push_back(v);

  unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tops.size())));
  std::vector<FinckePohst> states;
  for (unsigned w = 0; w < workers; ++w)
    states.push_back(FinckePohst{gram, q, bound2, limit2, options.node_budget, shared, 0, {}, Coefficients(n, 0)});
  auto run = [&](unsigned w) {
    FinckePohst& s = states[w];
    for (std::size_t idx = w; idx < tops.size(); idx += workers) {
      long v = tops[idx];
      long double rest = search2 - q(n - 1, n - 1) * v * v;
      if (rest < -search2 * 1e-12L) continue;
      s.count();
      s.x[n - 1] = v;
      if (n == 1) {
        if (canonical_sign(s.x)) {
          long double norm2 = quadratic_form(gram, s.x);
          if (norm2 <= limit2) s.found.push_back({s.x, norm2});
        }
      } else {
        s.level(n - 2, rest);
      }
      s.x[n - 1] = 0;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& s : states) {
    out.nodes += s.nodes;
    for (auto& v : s.found) out.vectors.push_back(std::move(v));
  }
  if (options.node_budget && out.nodes > options.node_budget) {
    fail(ErrorCode::kEnumerationBudget, "enumeration node budget exhausted");
  }
  sort_norm_then_lex(out.vectors);
  return out;
}

namespace {

struct BoxWalk {
  const RealGram& gram;
  std::vector<long> bounds;
  const BoxVisitor& visit;
  std::uint64_t budget;
  const BoxCap& cap;
  RealGram q;  // Cholesky form of the reversed Gram matrix
  BoxResult result;
  Coefficients x;

  // Contribution of coordinate i given x_0..x_i; partial sums bound the norm from below.
  long double term(std::size_t i) const {
    const std::size_t m = x.size(), a = m - 1 - i;
    long double c = x[i];
    for (std::size_t k = 0; k < i; ++k) c += q(a, m - 1 - k) * x[k];
    return q(a, a) * c * c;
  }

  void level(std::size_t i, bool all_zero, long double partial) {
    // 0, 1, -1, 2, -2, ...; negatives are skipped while the prefix is zero.
    for (long step = 0;; ++step) {
      long v = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
      if (std::labs(v) > bounds[i]) break;
      if (all_zero && v < 0) continue;
      ++result.nodes;
      if (budget && result.nodes > budget) fail(ErrorCode::kEnumerationBudget, "box enumeration node budget exhausted");
      x[i] = v;
      long double here = partial;
      if (cap) {
        here += term(i);
        if (here > cap() * (1 + 1e-9L) + 1e-18L) continue;
      }
      bool zero_prefix = all_zero && v == 0;
      if (i + 1 == x.size()) {
        if (!zero_prefix) {
          ++result.leaves;
          if (auto tightened = visit(x, quadratic_form(gram, x))) {
            for (std::size_t k = 0; k < bounds.size(); ++k) bounds[k] = std::min(bounds[k], (*tightened)[k]);
          }
        }
      } else {
        level(i + 1, zero_prefix, here);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

BoxResult box_enumerate(const RealGram& gram, std::vector<long> bounds, const BoxVisitor& visit,
                        std::uint64_t node_budget, const BoxCap& cap) {
  if (!gram.is_square() || bounds.size() != gram.rows())
    fail(ErrorCode::kDimension, "box bounds do not match the Gram matrix");
  const std::size_t m = gram.rows();
  RealGram reversed(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) reversed(i, j) = gram(m - 1 - i, m - 1 - j);
  BoxWalk walk{gram, std::move(bounds), visit, node_budget, cap, cap ? cholesky_form(reversed) : RealGram(), {},
               Coefficients(m, 0)};
  if (m == 0) return walk.result;
  walk.level(0, true, 0);
  return walk.result;
}

Rational exact_quadratic_form(const exact::Matrix<Rational>& g, const Coefficients& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) row += g(i, j) * x[j];
    s += row * x[i];
  }
  return s;
}

Coefficients coefficients_in_input(const exact::Matrix<exact::Integer>& u, const Coefficients& y) {
  // The reduced basis is u * B, so y^T (u B) = (u^T y)^T B.
  Coefficients c(y.size(), 0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] != 0) s += u(i, j) * y[i];
    if (!s.fits_slong_p()) fail(ErrorCode::kInternal, "coefficient overflow");
    c[j] = s.get_si();
  }
  return c;
}


}  // namespace matsplit::lattice
