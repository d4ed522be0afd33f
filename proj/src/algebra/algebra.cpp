#include "algebra/algebra.hpp"

#include <cmath>

namespace matsplit::algebra {

using exact::ExactVector;
using exact::FieldTraits;

StructureConstants::StructureConstants(std::int64_t d, std::size_t dim)
    : d_(d), dim_(dim), gamma_(dim * dim * dim, Scalar::zero(d)) {}

StructureConstants::StructureConstants(std::int64_t d, std::size_t dim, std::vector<Scalar> gamma)
    : d_(d), dim_(dim), gamma_(std::move(gamma)) {
  if (gamma_.size() != dim * dim * dim) {
    fail(ErrorCode::kDimension, "structure constant table has wrong size");
  }
}

std::size_t StructureConstants::matrix_size() const {
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim_))));
  if (n * n != dim_) {
    fail(ErrorCode::kInput, "algebra dimension " + std::to_string(dim_) + " is not a perfect square");
  }
  return n;
}

Element StructureConstants::unit_vector(std::size_t i) const {
  Element e = zero();
  e.at(i) = Scalar::one(d_);
  return e;
}

namespace {

void check_length(const StructureConstants& t, const Element& x) {
  if (x.size() != t.dim()) {
    fail(ErrorCode::kDimension, "element has " + std::to_string(x.size()) +
                                    " coordinates, algebra has dimension " +
                                    std::to_string(t.dim()));
  }
}

// a_i * x
Element basis_times(const StructureConstants& t, std::size_t i, const Element& x) {
  Element out = t.zero();
  for (std::size_t j = 0; j < t.dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t k = 0; k < t.dim(); ++k) {
      const Scalar& g = t(i, j, k);
      if (!g.is_zero()) out[k] += x[j] * g;
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const StructureConstants& table, std::size_t max_reported) {
  std::vector<Violation> out;
  const std::size_t m = table.dim();
  for (const auto& g : table.gamma()) {
    if (g.d() != table.field() && !(g.d() == 0 && g.is_rational())) {
      out.push_back({Violation::Kind::kFieldMismatch, 0, 0, 0,
                     "structure constant over d=" + std::to_string(g.d()) + " in a table over d=" +
                         std::to_string(table.field())});
      return out;
    }
  }
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (m == 0 || n * n != m) {
    out.push_back({Violation::Kind::kNotSquare, 0, 0, 0,
                   "dimension " + std::to_string(m) + " is not a perfect square"});
  }
  for (std::size_t i = 0; i < m && out.size() < max_reported; ++i) {
    for (std::size_t j = 0; j < m && out.size() < max_reported; ++j) {
      for (std::size_t k = 0; k < m && out.size() < max_reported; ++k) {
        for (std::size_t p = 0; p < m; ++p) {
          Scalar lhs = Scalar::zero(table.field());
          Scalar rhs = Scalar::zero(table.field());
          for (std::size_t l = 0; l < m; ++l) {
            if (!table(i, j, l).is_zero() && !table(l, k, p).is_zero())
              lhs += table(i, j, l) * table(l, k, p);
            if (!table(j, k, l).is_zero() && !table(i, l, p).is_zero())
              rhs += table(j, k, l) * table(i, l, p);
          }
          if (lhs != rhs) {
            out.push_back({Violation::Kind::kAssociativity, i, j, k,
                           "(a" + std::to_string(i + 1) + " a" + std::to_string(j + 1) + ") a" +
                               std::to_string(k + 1) + " != a" + std::to_string(i + 1) + " (a" +
                               std::to_string(j + 1) + " a" + std::to_string(k + 1) + ")"});
            break;
          }
        }
      }
    }
  }
  try {
    find_identity(table);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoIdentity) throw;
    out.push_back({Violation::Kind::kNoIdentity, 0, 0, 0, e.what()});
  }
  return out;
}

Element multiply(const StructureConstants& table, const Element& x, const Element& y) {
  check_length(table, x);
  check_length(table, y);
  Element out = table.zero();
  for (std::size_t i = 0; i < table.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < table.dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < table.dim(); ++k) {
        const Scalar& g = table(i, j, k);
        if (!g.is_zero()) out[k] += xy * g;
      }
    }
  }
  return out;
}

Element find_identity(const StructureConstants& table) {
  const std::size_t m = table.dim();
  const std::int64_t d = table.field();
  // Unknown e: sum_i e_i gamma_ijk = delta_jk and sum_i e_i gamma_jik = delta_jk.
  ExactMatrix sys(2 * m * m, m, Scalar::zero(d));
  ExactVector rhs(2 * m * m, Scalar::zero(d));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t r = j * m + k;
      for (std::size_t i = 0; i < m; ++i) {
        sys(r, i) = table(i, j, k);
        sys(m * m + r, i) = table(j, i, k);
      }
      if (j == k) rhs[r] = rhs[m * m + r] = Scalar::one(d);
    }
  }
  auto e = exact::solve_of(sys, rhs);
  if (!e) fail(ErrorCode::kNoIdentity, "the algebra has no two-sided identity");
  for (auto& x : *e) x = x + Scalar::zero(d);
  return *e;
}

ExactMatrix left_regular(const StructureConstants& table, const Element& x) {
  check_length(table, x);
  const std::size_t m = table.dim();
  ExactMatrix out(m, m, Scalar::zero(table.field()));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& g = table(i, j, k);
        if (!g.is_zero()) out(k, j) += x[i] * g;
      }
    }
  }
  return out;
}

ExactMatrix right_regular(const StructureConstants& table, const Element& x) {
  check_length(table, x);
  const std::size_t m = table.dim();
  ExactMatrix out(m, m, Scalar::zero(table.field()));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& g = table(j, i, k);
        if (!g.is_zero()) out(k, j) += x[i] * g;
      }
    }
  }
  return out;
}

std::size_t ideal_rank(const StructureConstants& table, const Element& c, std::size_t n) {
  std::size_t dim = exact::rank_of(left_regular(table, c));
  if (dim % n != 0) {
    fail(ErrorCode::kPromiseViolated, "dim C*A = " + std::to_string(dim) +
                                          " is not divisible by n = " + std::to_string(n));
  }
  return dim / n;
}

std::size_t ideal_rank(const StructureConstants& table, const Element& c) {
  return ideal_rank(table, c, table.matrix_size());
}

IsomorphismWitness build_isomorphism(const StructureConstants& table, const Element& c) {
  const std::size_t n = table.matrix_size();
  const std::size_t m = table.dim();
  const std::int64_t d = table.field();
  if (ideal_rank(table, c, n) != 1) {
    fail(ErrorCode::kPrecondition, "build_isomorphism needs an element of rank one");
  }
  IsomorphismWitness w;
  w.rank_one_element = c;

  // Greedy basis of A*C from the products a_i * C.
  ExactMatrix span(0, m);
  for (std::size_t i = 0; i < m && w.left_ideal_basis.size() < n; ++i) {
    Element v = basis_times(table, i, c);
    std::vector<Element> cols = w.left_ideal_basis;
    cols.push_back(v);
    if (exact::rank_of(ExactMatrix::from_cols(cols)) == cols.size()) {
      w.left_ideal_basis.push_back(std::move(v));
    }
  }
  if (w.left_ideal_basis.size() != n) {
    fail(ErrorCode::kInternal, "left ideal A*C has unexpected dimension");
  }
  ExactMatrix u = ExactMatrix::from_cols(w.left_ideal_basis);
  for (std::size_t k = 0; k < m; ++k) {
    ExactMatrix img(n, n, Scalar::zero(d));
    for (std::size_t j = 0; j < n; ++j) {
      Element prod = basis_times(table, k, w.left_ideal_basis[j]);
      auto coeffs = exact::solve_of(u, prod);
      if (!coeffs) fail(ErrorCode::kInternal, "A*C is not closed under left multiplication");
      for (std::size_t i = 0; i < n; ++i) img(i, j) = (*coeffs)[i];
    }
    w.images.push_back(std::move(img));
  }
  if (auto err = check_witness(table, w); !err.empty()) fail(ErrorCode::kInternal, err);
  return w;
}

ExactMatrix apply_images(const std::vector<ExactMatrix>& images, const Element& x) {
  if (images.empty() || images.size() != x.size())
    fail(ErrorCode::kDimension, "image family does not match element length");
  const std::size_t n = images[0].rows();
  std::int64_t d = images[0].rows() ? images[0](0, 0).d() : 0;
  if (!x.empty() && x[0].d() != 0) d = x[0].d();
  ExactMatrix out(n, n, Scalar::zero(d));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += x[k] * images[k](i, j);
  }
  return out;
}

std::string check_witness(const StructureConstants& table, const IsomorphismWitness& w) {
  const std::size_t m = table.dim();
  if (w.images.size() != m) return "witness has the wrong number of images";
  const std::size_t n = w.images[0].rows();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ExactMatrix lhs = w.images[i] * w.images[j];
      Element col(m, Scalar::zero(table.field()));
      for (std::size_t k = 0; k < m; ++k) col[k] = table(i, j, k);
      ExactMatrix rhs = apply_images(w.images, col);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (lhs(r, s) != rhs(r, s)) {
            return "multiplicativity fails on (a" + std::to_string(i + 1) + ", a" +
                   std::to_string(j + 1) + ")";
          }
    }
  }
  ExactMatrix one = apply_images(w.images, find_identity(table));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      if (one(r, s) != (r == s ? Scalar(1) : Scalar(0))) return "phi(1) is not the identity";
  return {};
}

ExactMatrix trace_gram(const StructureConstants& table, const std::vector<Element>& basis) {
  const std::size_t k = basis.size();
  ExactMatrix g(k, k, Scalar::zero(table.field()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      ExactMatrix l = left_regular(table, multiply(table, basis[i], basis[j]));
      Scalar tr = Scalar::zero(table.field());
      for (std::size_t r = 0; r < table.dim(); ++r) tr += l(r, r);
      g(i, j) = tr;
      g(j, i) = tr;
    }
  }
  return g;
}

StructureConstants restrict_to_rationals(const StructureConstants& table) {
  const std::int64_t d = table.field();
  if (d == 0) return table;
  const std::size_t m = table.dim();
  StructureConstants out(0, 2 * m);
  const Rational dd(d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Rational& g = table(i, j, k).a();
        const Rational& h = table(i, j, k).b();
        // a_i a_j = sum (g a_k + h t a_k), with t = sqrt(-d) central and t^2 = -d.
        out(i, j, k) = g;
        out(i, j, m + k) = h;
        out(m + i, j, k) = out(i, m + j, k) = Rational(-dd * h);
        out(m + i, j, m + k) = out(i, m + j, m + k) = g;
        out(m + i, m + j, k) = Rational(-dd * g);
        out(m + i, m + j, m + k) = Rational(-dd * h);
      }
    }
  }
  return out;
}

Element from_rational_coords(const std::vector<Rational>& coords, std::int64_t d) {
  if (d == 0) {
    Element out;
    for (const auto& x : coords) out.emplace_back(x);
    return out;
  }
  if (coords.size() % 2 != 0) fail(ErrorCode::kDimension, "odd-length restricted coordinates");
  const std::size_t m = coords.size() / 2;
  Element out;
  for (std::size_t k = 0; k < m; ++k) out.emplace_back(coords[k], coords[m + k], d);
  return out;
}

std::vector<Rational> to_rational_coords(const Element& x) {
  bool field = !x.empty() && x[0].d() != 0;
  std::vector<Rational> out;
  for (const auto& s : x) out.push_back(s.a());
  if (field)
    for (const auto& s : x) out.push_back(s.b());
  return out;
}

StructureConstants matrix_algebra(std::size_t n, std::int64_t d) {
  StructureConstants t(d, n * n);
  // E_ij E_kl = delta_jk E_il; E_ij has index i*n + j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t(i * n + j, j * n + l, i * n + l) = Scalar::one(d);
  return t;
}

StructureConstants change_basis(const StructureConstants& table, const ExactMatrix& change) {
  const std::size_t m = table.dim();
  const std::int64_t d = table.field();
  if (change.rows() != m || change.cols() != m)
    fail(ErrorCode::kDimension, "basis change has the wrong shape");
  auto inv = exact::inverse_of(change);
  if (!inv) fail(ErrorCode::kInput, "basis change is singular");
  ExactMatrix inv_t = inv->transposed();
  std::vector<Element> b;
  for (std::size_t i = 0; i < m; ++i) {
    Element v = change.row(i);
    for (auto& x : v) x = x + Scalar::zero(d);
    b.push_back(std::move(v));
  }
  StructureConstants out(d, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Element prod = multiply(table, b[i], b[j]);
      Element coords = inv_t * prod;
      for (std::size_t k = 0; k < m; ++k) out(i, j, k) = coords[k] + Scalar::zero(d);
    }
  }
  return out;
}

}  // namespace matsplit::algebra
