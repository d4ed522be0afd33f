#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra/algebra.hpp"
#include "exactnum/surd.hpp"
#include "exactnum/zlattice.hpp"
#include "lattice/lll.hpp"
#include "orders/orders.hpp"
#include "splitter/splitter.hpp"

namespace matsplit::io {

using Json = nlohmann::ordered_json;
using exact::Rational;
using exact::Scalar;

// Throws kInput on malformed text.
Json parse_text(const std::string& text);

Json rational_json(const Rational& q);
Rational parse_rational(const Json& j);
Json scalar_json(const Scalar& s, std::int64_t d);
Scalar parse_scalar(const Json& j, std::int64_t d);
Json field_json(std::int64_t d);
// {"type":"Q"} -> 0, {"type":"imag_quad","d":k} -> k.
std::int64_t parse_field(const Json& j);
Json surd_json(const exact::Surd& s);
Json element_json(const algebra::Element& x, std::int64_t d);
algebra::Element parse_element(const Json& j, std::int64_t d, std::size_t dim);
Json matrix_json(const exact::ExactMatrix& m, std::int64_t d);
exact::ExactMatrix parse_matrix_rows(const Json& j, std::int64_t d);

struct AlgebraDocument {
  algebra::StructureConstants table;
  std::optional<exact::ZLattice> lattice;  // optional order lattice in rational coordinates
};

AlgebraDocument parse_algebra(const Json& j);
Json algebra_json(const algebra::StructureConstants& table, const std::optional<exact::ZLattice>& lattice = {});

struct LatticeDocument {
  std::optional<std::vector<exact::RationalVector>> basis;
  lattice::RationalMatrix gram;
};

// {"dim": k, "basis": [...]} or {"dim": k, "gram": [...]}.
LatticeDocument parse_lattice(const Json& j);
Json lattice_json(const LatticeDocument& doc);

struct MatrixDocument {
  std::int64_t d = 0;
  exact::ExactMatrix matrix;
};

MatrixDocument parse_matrix_document(const Json& j);
Json matrix_document_json(const MatrixDocument& doc);

Json order_json(const orders::Order& order, const orders::SaturationTrace& trace, std::int64_t d);
Json split_result_json(const algebra::StructureConstants& table, const splitter::SplitResult& r);
algebra::IsomorphismWitness parse_witness(const Json& result, const algebra::StructureConstants& table);

}  // namespace matsplit::io
