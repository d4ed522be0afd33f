#include "splitter/splitter.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "common/error.hpp"
#include "embed/embed.hpp"
#include "exactnum/linalg.hpp"
#include "lattice/constants.hpp"
#include "lattice/enumerate.hpp"
#include "lattice/lll.hpp"

namespace matsplit::splitter {

using exact::Integer;
using exact::RationalVector;
using exact::Scalar;
using lattice::Coefficients;

namespace {

constexpr std::size_t kMaxRationalN = 43;

long double slack_for(unsigned bits) {
  return std::max(std::ldexp(1.0L, -static_cast<int>(bits / 4)), 1e-15L);
}

long double squared(long double x) { return x * x; }

// One precision level: the embedded lattice, rationalized and LLL-reduced.
struct Search {
  const StructureConstants* table = nullptr;
  std::vector<RationalVector> order_basis;
  embed::Embedding embedding;
  lattice::ReducedGram reduced;
  lattice::RealGram real_gram;
  long double slack = 0;
  lattice::EnumerationOptions options;
  SplitStats* stats = nullptr;

  Element element(const Coefficients& y) const {
    Coefficients c = lattice::coefficients_in_input(reduced.u, y);
    RationalVector coords(order_basis[0].size(), Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += order_basis[j][k] * c[j];
    }
    return algebra::from_rational_coords(coords, table->field());
  }

  std::size_t rank(const Coefficients& y) const {
    ++stats->rank_tests;
    return algebra::ideal_rank(*table, element(y));
  }

  long double first_norm() const { return std::sqrt(exact::to_long_double(reduced.gram(0, 0))); }
};

Search prepare(const StructureConstants& table, const orders::Order& order, unsigned bits, const SplitConfig& cfg,
               SplitStats& stats) {
  embed::PrecisionScope scope(bits);
  Search s;
  s.table = &table;
  s.order_basis = order.basis();
  s.embedding = embed::split_numeric(table, order, bits, cfg.seed);
  embed::EmbeddedLattice lat = embed::embed_order(s.embedding, order);
  s.slack = slack_for(bits);
  // Rationalize well below the slack.
  auto rb = embed::rationalize(lat, Integer(1) << (bits / 2));
  embed::Real scale(1);
  for (std::size_t i = 0; i < lat.dim; ++i) scale = std::max(scale, lat.gram(i, i));
  if (rb.perturbation * sqrt(scale) * 64 > embed::to_real(Rational(1)) * embed::Real(static_cast<double>(s.slack)))
    fail(ErrorCode::kPrecisionInsufficient, "embedding error exceeds the comparison slack");
  s.reduced = lattice::reduce_gram(lattice::gram_of(rb.vectors));
  s.real_gram = lattice::to_real_gram(s.reduced.gram);
  s.options.node_budget = cfg.enumeration_budget;
  s.options.threads = cfg.threads;
  s.options.relative_slack = s.slack;
  s.stats = &stats;
  return s;
}

std::optional<Coefficients> ordered_over_Q(const Search& s, std::size_t n, SplitStats& stats) {
  long double gamma = lattice::berge_martinet_upper(n);
  // The shortest vector has rank one and norm <= min(gamma', ||b_1||).
  long double bound = std::min(gamma, s.first_norm()) * (1 + s.slack);
  for (int round = 0; round < 2; ++round, bound *= 2) {
    stats.norm_bound = bound;
    auto found = lattice::enumerate_short(s.real_gram, bound, s.options);
    stats.nodes += found.nodes;
    for (const auto& v : found.vectors)
      if (s.rank(v.coeffs) == 1) return v.coeffs;
    stats.bound_doubled = true;
  }
  return std::nullopt;
}

std::optional<Coefficients> box_over_Q(const Search& s, std::size_t n, bool dynamic, SplitStats& stats) {
  const std::size_t m = s.real_gram.rows();
  const long double gamma = lattice::berge_martinet_upper(n);
  const long double defect = lattice::orthogonality_defect(s.reduced.gram);
  stats.orthogonality_defect = defect;
  std::vector<long double> norms(m);
  for (std::size_t i = 0; i < m; ++i) norms[i] = std::sqrt(s.real_gram(i, i));
  // Smallest factor gamma_r^2 / sqrt(r) over the possible ranks.
  long double min_factor = std::numeric_limits<long double>::infinity();
  for (std::size_t r = 1; r <= n; ++r)
    min_factor = std::min(min_factor, lattice::hermite_gamma_squared(r) / std::sqrt(static_cast<long double>(r)));

  long double d_current = std::numeric_limits<long double>::infinity();
  auto bounds_for = [&](long double d) {
    return lattice::lenstra_coefficient_bounds(defect * (1 + s.slack), std::min(d, gamma), norms);
  };
  stats.norm_bound = gamma;
  std::optional<Coefficients> best;
  long double best_norm2 = 0;
  auto visit = [&](const Coefficients& y, long double norm2) -> std::optional<std::vector<long>> {
    const long double norm = std::sqrt(norm2);
    bool candidate = norm <= gamma * (1 + s.slack) && (!best || norm2 <= best_norm2 * (1 + 1e-12L));
    bool improves = dynamic && norm * min_factor < d_current;
    if (!candidate && !improves) return std::nullopt;
    std::size_t r = s.rank(y);
    if (candidate && r == 1) {
      bool better = !best || norm2 < best_norm2 * (1 - 1e-12L) || y < *best;
      if (better) {
        best = y;
        best_norm2 = norm2;
      }
    }
    if (improves) {
      long double next = dynamic_bound_update(d_current, norm, r);
      if (next < d_current) {
        d_current = next;
        stats.norm_bound = std::min(d_current, gamma);
        return bounds_for(d_current);
      }
    }
    return std::nullopt;
  };
  // The target is a shortest vector, so its norm never exceeds min(d, gamma').
  lattice::BoxCap cap;
  if (dynamic) cap = [&] { return squared(std::min(d_current, gamma) * (1 + s.slack)); };
  auto res = lattice::box_enumerate(s.real_gram, bounds_for(d_current), visit, s.options.node_budget, cap);
  stats.nodes += res.nodes;
  return best;
}

std::optional<Coefficients> ordered_imag_quad(const Search& s, std::int64_t d, bool audit, SplitStats& stats) {
  long double bound = s.first_norm() * (1 + s.slack);
  stats.norm_bound = bound;
  auto found = lattice::enumerate_short(s.real_gram, bound, s.options);
  stats.nodes += found.nodes;
  if (found.vectors.empty()) fail(ErrorCode::kInternal, "enumeration missed the first basis vector");
  const long double min2 = found.vectors[0].norm2;
  std::optional<Coefficients> chosen;
  for (const auto& v : found.vectors) {
    if (v.norm2 > min2 * (1 + s.slack)) break;
    ++stats.minimal_class_size;
    // For d = 3 every minimal vector has rank one; stop at the first.
    if (chosen && d != 1 && !audit) continue;
    if (s.rank(v.coeffs) == 1) {
      ++stats.minimal_class_rank_one;
      if (!chosen) chosen = v.coeffs;
    }
  }
  if (chosen) return chosen;
  // Outside the proven range: widen once and take the first rank-one vector.
  stats.bound_doubled = true;
  stats.norm_bound = bound * 2;
  auto wider = lattice::enumerate_short(s.real_gram, bound * 2, s.options);
  stats.nodes += wider.nodes;
  for (const auto& v : wider.vectors)
    if (s.rank(v.coeffs) == 1) return v.coeffs;
  return std::nullopt;
}

Rational expected_discriminant(std::int64_t d, std::size_t m) {
  if (d == 0) return 1;
  Rational disc = 1;
  long D = d % 4 == 3 ? d : 4 * d;
  for (std::size_t i = 0; i < m; ++i) disc *= D;
  return disc;
}

SplitResult run(const StructureConstants& table, const SplitConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  auto violations = algebra::validate(table, 1);
  if (!violations.empty()) fail(ErrorCode::kInput, "invalid structure constants: " + violations[0].message);
  const std::size_t n = table.matrix_size();
  const std::int64_t d = table.field();
  if (d == 0 && n > kMaxRationalN) fail(ErrorCode::kDomain, "matrix size above 43 over Q is not supported");
  if (d != 0 && (d != 1 && d != 3)) fail(ErrorCode::kDomain, "imaginary quadratic splitting needs d = 1 or d = 3");
  if (d != 0 && n != 2) fail(ErrorCode::kDomain, "imaginary quadratic splitting needs n = 2");
  if (d != 0 && cfg.engine == Engine::kBox) fail(ErrorCode::kInput, "the box engine works over Q only");
  if (cfg.precision_bits < embed::kMinPrecisionBits) fail(ErrorCode::kInput, "precision below 64 bits");

  SplitResult result;
  SplitStats& stats = result.stats;
  stats.engine = cfg.engine == Engine::kBox ? (cfg.dynamic_pruning ? "box-dynamic" : "box") : "ordered";

  orders::Order order;
  if (cfg.lattice) {
    order.lattice = *cfg.lattice;
  } else {
    orders::SaturationTrace trace;
    order = orders::maximal_order(table, cfg.factor_budget, &trace);
    stats.discriminants = trace.discriminants;
    stats.saturation_rounds = trace.rounds;
    Rational want = expected_discriminant(d, table.dim());
    if (abs(order.discriminant) != want)
      fail(ErrorCode::kPromiseViolated, "maximal order has |discriminant| " + exact::to_string(abs(order.discriminant)) +
                                            ", a split algebra has " + exact::to_string(want));
  }

  std::optional<Coefficients> found;
  std::optional<Search> search;
  for (unsigned bits = cfg.precision_bits;; bits *= 2) {
    ++stats.precision_attempts;
    try {
      search = prepare(table, order, bits, cfg, stats);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecisionInsufficient || bits * 2 > cfg.max_precision_bits) throw;
      continue;
    }
    stats.precision_bits = bits;
    break;
  }
  if (d != 0)
    found = ordered_imag_quad(*search, d, cfg.audit_minimal_class, stats);
  else if (cfg.engine == Engine::kBox)
    found = box_over_Q(*search, n, cfg.dynamic_pruning, stats);
  else
    found = ordered_over_Q(*search, n, stats);
  if (!found) fail(ErrorCode::kEnumerationExhausted, "no rank-one element within the search bound");

  result.rank_one_element = search->element(*found);
  result.witness = algebra::build_isomorphism(table, result.rank_one_element);
  std::string bad = algebra::check_witness(table, result.witness);
  if (!bad.empty()) fail(ErrorCode::kInternal, "witness failed verification: " + bad);
  {
    embed::PrecisionScope scope(stats.precision_bits);
    embed::ComplexMatrix img = embed::image_of(search->embedding, result.rank_one_element);
    embed::Real s(0);
    for (std::size_t i = 0; i < img.rows(); ++i)
      for (std::size_t j = 0; j < img.cols(); ++j) s += embed::abs2(img(i, j));
    stats.norm = static_cast<long double>(sqrt(s));
  }
  stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

long double dynamic_bound_update(long double d_current, long double norm, std::size_t rank) {
  if (rank == 0) fail(ErrorCode::kDomain, "rank must be positive");
  long double v = lattice::hermite_gamma_squared(rank) / std::sqrt(static_cast<long double>(rank)) * norm;
  return std::min(d_current, v);
}

SplitResult split(const StructureConstants& table, const SplitConfig& config) { return run(table, config); }

SplitResult split_over_Q(const StructureConstants& table, const SplitConfig& config) {
  if (table.field() != 0) fail(ErrorCode::kType, "expected a table over Q");
  return run(table, config);
}

SplitResult split_imag_quad(const StructureConstants& table, const SplitConfig& config) {
  if (table.field() == 0) fail(ErrorCode::kType, "expected a table over an imaginary quadratic field");
  return run(table, config);
}

Instance generate_instance(std::size_t n, std::int64_t d, long height, std::uint64_t seed) {
  if (n == 0) fail(ErrorCode::kInput, "n must be positive");
  if (height < 1) fail(ErrorCode::kInput, "height must be at least 1");
  if (d != 0 && d != 1 && d != 3) fail(ErrorCode::kInput, "field must be Q, d = 1 or d = 3");
  const std::size_t m = n * n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-height, height);
  Scalar w = d == 0 ? Scalar(0) : (d % 4 == 3 ? Scalar(Rational(1, 2), Rational(1, 2), d) : Scalar::root(d));
  Instance out;
  while (true) {
    out.change = exact::ExactMatrix(m, m, Scalar::zero(d));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Scalar x(dist(rng));
        if (d != 0) x = Scalar(Rational(dist(rng)), 0, d) + Scalar(Rational(dist(rng)), 0, d) * w;
        out.change(i, j) = d == 0 ? x : x + Scalar::zero(d);
      }
    if (!exact::determinant(out.change).is_zero()) break;
  }
  out.table = algebra::change_basis(algebra::matrix_algebra(n, d), out.change);
  for (std::size_t k = 0; k < m; ++k) {
    exact::ExactMatrix img(n, n, Scalar::zero(d));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) img(i, j) = out.change(k, i * n + j);
    out.images.push_back(std::move(img));
  }
  return out;
}

}  // namespace matsplit::splitter
