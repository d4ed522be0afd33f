#include "io/json.hpp"

#include "common/error.hpp"

namespace matsplit::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::kInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t parse_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(ErrorCode::kInput, std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

void expect_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size)
    fail(ErrorCode::kDimension, what + " must be an array of length " + std::to_string(size));
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInput, std::string("malformed JSON: ") + e.what());
  }
}

Json rational_json(const Rational& q) { return exact::to_string(q); }

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  fail(ErrorCode::kInput, "rational must be a string \"p/q\" or an integer");
}

Json scalar_json(const Scalar& s, std::int64_t d) {
  if (d == 0) return rational_json(s.a());
  return Json{{"a", rational_json(s.a())}, {"b", rational_json(s.b())}};
}

Scalar parse_scalar(const Json& j, std::int64_t d) {
  if (j.is_object()) {
    Rational a = j.contains("a") ? parse_rational(j.at("a")) : Rational(0);
    Rational b = j.contains("b") ? parse_rational(j.at("b")) : Rational(0);
    if (d == 0) {
      if (sgn(b) != 0) fail(ErrorCode::kType, "irrational scalar in a table over Q");
      return Scalar(a);
    }
    return Scalar(a, b, d);
  }
  Rational a = parse_rational(j);
  return d == 0 ? Scalar(a) : Scalar(a, 0, d);
}

Json field_json(std::int64_t d) {
  if (d == 0) return Json{{"type", "Q"}};
  return Json{{"type", "imag_quad"}, {"d", d}};
}

std::int64_t parse_field(const Json& j) {
  const Json& type = member(j, "type");
  if (type == "Q") return 0;
  if (type != "imag_quad") fail(ErrorCode::kInput, "field type must be \"Q\" or \"imag_quad\"");
  const Json& d = member(j, "d");
  if (!d.is_number_integer() || d.get<long long>() <= 0) fail(ErrorCode::kInput, "field d must be a positive integer");
  std::int64_t v = d.get<std::int64_t>();
  for (std::int64_t p = 2; p * p <= v; ++p)
    if (v % (p * p) == 0) fail(ErrorCode::kInput, "field d must be squarefree");
  return v;
}

Json surd_json(const exact::Surd& s) {
  return Json{{"exact", s.symbolic()}, {"square", rational_json(s.square())}, {"decimal", static_cast<double>(s.value())}};
}

Json element_json(const algebra::Element& x, std::int64_t d) {
  Json out = Json::array();
  for (const auto& s : x) out.push_back(scalar_json(s, d));
  return out;
}

algebra::Element parse_element(const Json& j, std::int64_t d, std::size_t dim) {
  expect_array(j, dim, "element");
  algebra::Element out;
  for (const auto& s : j) out.push_back(parse_scalar(s, d));
  return out;
}

Json matrix_json(const exact::ExactMatrix& m, std::int64_t d) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j), d));
    rows.push_back(row);
  }
  return rows;
}

exact::ExactMatrix parse_matrix_rows(const Json& j, std::int64_t d) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    fail(ErrorCode::kInput, "matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].size();
  exact::ExactMatrix m(j.size(), cols, Scalar::zero(d));
  for (std::size_t r = 0; r < j.size(); ++r) {
    expect_array(j[r], cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c], d);
  }
  return m;
}

AlgebraDocument parse_algebra(const Json& j) {
  std::int64_t d = parse_field(member(j, "field"));
  if (d != 0 && d != 1 && d != 3) fail(ErrorCode::kInput, "algebras are supported over Q, d = 1 and d = 3");
  std::size_t m = parse_size(member(j, "dim"), "dim");
  if (m == 0) fail(ErrorCode::kInput, "dim must be positive");
  const Json& g = member(j, "gamma");
  expect_array(g, m, "gamma");
  std::vector<Scalar> gamma;
  gamma.reserve(m * m * m);
  for (const auto& gi : g) {
    expect_array(gi, m, "gamma[i]");
    for (const auto& gij : gi) {
      expect_array(gij, m, "gamma[i][j]");
      for (const auto& s : gij) gamma.push_back(parse_scalar(s, d));
    }
  }
  AlgebraDocument doc{algebra::StructureConstants(d, m, std::move(gamma)), std::nullopt};
  if (j.contains("lattice")) {
    const std::size_t k = d == 0 ? m : 2 * m;
    const Json& basis = member(j.at("lattice"), "basis");
    expect_array(basis, k, "lattice basis");
    std::vector<exact::RationalVector> rows;
    for (const auto& r : basis) {
      expect_array(r, k, "lattice basis vector");
      exact::RationalVector v;
      for (const auto& x : r) v.push_back(parse_rational(x));
      rows.push_back(std::move(v));
    }
    doc.lattice = exact::ZLattice::from_generators(rows, k);
    if (!doc.lattice->full_rank()) fail(ErrorCode::kInput, "lattice basis is not of full rank");
  }
  return doc;
}

Json algebra_json(const algebra::StructureConstants& table, const std::optional<exact::ZLattice>& lattice) {
  const std::size_t m = table.dim();
  const std::int64_t d = table.field();
  Json gamma = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Json gi = Json::array();
    for (std::size_t j = 0; j < m; ++j) {
      Json gij = Json::array();
      for (std::size_t k = 0; k < m; ++k) gij.push_back(scalar_json(table(i, j, k), d));
      gi.push_back(gij);
    }
    gamma.push_back(gi);
  }
  Json out{{"field", field_json(d)}, {"dim", m}, {"gamma", gamma}};
  if (lattice) {
    Json basis = Json::array();
    for (const auto& v : lattice->basis()) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(rational_json(x));
      basis.push_back(row);
    }
    out["lattice"] = Json{{"basis", basis}};
  }
  return out;
}

LatticeDocument parse_lattice(const Json& j) {
  std::size_t k = parse_size(member(j, "dim"), "dim");
  if (k == 0) fail(ErrorCode::kInput, "dim must be positive");
  LatticeDocument doc;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    expect_array(b, k, "basis");
    if (!b[0].is_array() || b[0].empty()) fail(ErrorCode::kInput, "basis vectors must be non-empty arrays");
    const std::size_t n = b[0].size();
    std::vector<exact::RationalVector> rows;
    for (const auto& r : b) {
      expect_array(r, n, "basis vector");
      exact::RationalVector v;
      for (const auto& x : r) v.push_back(parse_rational(x));
      rows.push_back(std::move(v));
    }
    doc.gram = lattice::gram_of(rows);
    doc.basis = std::move(rows);
  } else if (j.contains("gram")) {
    const Json& g = j.at("gram");
    expect_array(g, k, "gram");
    doc.gram = lattice::RationalMatrix(k, k, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      expect_array(g[r], k, "gram row");
      for (std::size_t c = 0; c < k; ++c) doc.gram(r, c) = parse_rational(g[r][c]);
    }
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < r; ++c)
        if (doc.gram(r, c) != doc.gram(c, r)) fail(ErrorCode::kInput, "gram matrix is not symmetric");
  } else {
    fail(ErrorCode::kInput, "lattice needs \"basis\" or \"gram\"");
  }
  if (sgn(lattice::gram_determinant(doc.gram)) <= 0) fail(ErrorCode::kInput, "lattice vectors are dependent");
  return doc;
}

Json lattice_json(const LatticeDocument& doc) {
  auto rows_of = [](const auto& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
      Json row = Json::array();
      for (const auto& x : r) row.push_back(rational_json(x));
      out.push_back(row);
    }
    return out;
  };
  Json out{{"dim", doc.gram.rows()}};
  if (doc.basis) {
    out["basis"] = rows_of(*doc.basis);
  } else {
    std::vector<exact::RationalVector> g;
    for (std::size_t i = 0; i < doc.gram.rows(); ++i) g.push_back(doc.gram.row(i));
    out["gram"] = rows_of(g);
  }
  return out;
}

MatrixDocument parse_matrix_document(const Json& j) {
  MatrixDocument doc;
  doc.d = parse_field(member(j, "field"));
  doc.matrix = parse_matrix_rows(member(j, "rows"), doc.d);
  return doc;
}

Json matrix_document_json(const MatrixDocument& doc) {
  return Json{{"kind", "matrix"}, {"field", field_json(doc.d)}, {"rows", matrix_json(doc.matrix, doc.d)}};
}

Json order_json(const orders::Order& order, const orders::SaturationTrace& trace, std::int64_t d) {
  Json basis = Json::array();
  for (const auto& v : order.basis()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_json(x));
    basis.push_back(row);
  }
  Json discs = Json::array();
  for (const auto& q : trace.discriminants) discs.push_back(rational_json(q));
  return Json{{"field", field_json(d)},
              {"coordinates", d == 0 ? "basis" : "restricted"},
              {"basis", basis},
              {"discriminant", rational_json(order.discriminant)},
              {"saturation", Json{{"rounds", trace.rounds}, {"discriminants", discs}}}};
}

Json split_result_json(const algebra::StructureConstants& table, const splitter::SplitResult& r) {
  const std::int64_t d = table.field();
  const auto& s = r.stats;
  Json ideal = Json::array();
  for (const auto& x : r.witness.left_ideal_basis) ideal.push_back(element_json(x, d));
  Json images = Json::array();
  for (const auto& m : r.witness.images) images.push_back(matrix_json(m, d));
  Json discs = Json::array();
  for (const auto& q : s.discriminants) discs.push_back(rational_json(q));
  Json stats{{"engine", s.engine},
             {"nodes", s.nodes},
             {"rank_tests", s.rank_tests},
             {"precision_bits", s.precision_bits},
             {"precision_attempts", s.precision_attempts},
             {"discriminants", discs},
             {"saturation_rounds", s.saturation_rounds},
             {"norm", static_cast<double>(s.norm)},
             {"norm_bound", static_cast<double>(s.norm_bound)},
             {"bound_doubled", s.bound_doubled},
             {"wall_seconds", s.wall_seconds}};
  if (s.engine != "ordered") stats["orthogonality_defect"] = static_cast<double>(s.orthogonality_defect);
  if (d != 0) {
    stats["minimal_class_size"] = s.minimal_class_size;
    stats["minimal_class_rank_one"] = s.minimal_class_rank_one;
  }
  return Json{{"field", field_json(d)},
              {"n", table.matrix_size()},
              {"dim", table.dim()},
              {"rank_one_element", element_json(r.rank_one_element, d)},
              {"witness", Json{{"left_ideal_basis", ideal}, {"images", images}}},
              {"stats", stats}};
}

algebra::IsomorphismWitness parse_witness(const Json& result, const algebra::StructureConstants& table) {
  const std::int64_t d = table.field();
  const std::size_t m = table.dim(), n = table.matrix_size();
  if (parse_field(member(result, "field")) != d) fail(ErrorCode::kType, "result and algebra use different fields");
  algebra::IsomorphismWitness w;
  w.rank_one_element = parse_element(member(result, "rank_one_element"), d, m);
  const Json& wj = member(result, "witness");
  const Json& ideal = member(wj, "left_ideal_basis");
  expect_array(ideal, n, "left_ideal_basis");
  for (const auto& x : ideal) w.left_ideal_basis.push_back(parse_element(x, d, m));
  const Json& images = member(wj, "images");
  expect_array(images, m, "images");
  for (const auto& img : images) {
    auto mat = parse_matrix_rows(img, d);
    if (mat.rows() != n || mat.cols() != n) fail(ErrorCode::kDimension, "image matrices must be n x n");
    w.images.push_back(std::move(mat));
  }
  return w;
}

}  // namespace matsplit::io
