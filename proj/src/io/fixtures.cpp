#include "io/fixtures.hpp"

#include "common/error.hpp"

namespace matsplit::io {

std::vector<std::string> fixture_names() {
  return {"standard-M2", "standard-M3", "gaussian-lambda", "eisenstein-M2", "d5-matrix", "A2", "A2-dual"};
}

std::vector<algebra::Element> gaussian_lambda_ok_basis() {
  const std::int64_t d = 1;
  const Scalar z = Scalar::zero(d), i = Scalar::root(d), h(Rational(1, 2), Rational(1, 2), d);
  // Entries in the order E11, E12, E21, E22.
  return {
      {h, h, h, h},
      {i, i, z, z},
      {i, z, i, z},
      {Scalar(Rational(-1), Rational(1), d), z, z, z},
  };
}

exact::ZLattice gaussian_lambda_lattice() {
  const Scalar i = Scalar::root(1);
  std::vector<exact::RationalVector> gens;
  for (const auto& f : gaussian_lambda_ok_basis())
    for (const Scalar& u : {Scalar::one(1), i}) {
      algebra::Element x = f;
      for (auto& s : x) s = s * u;
      gens.push_back(algebra::to_rational_coords(x));
    }
  return exact::ZLattice::from_generators(gens, 8);
}

lattice::RationalMatrix a2_gram() {
  lattice::RationalMatrix g(2, 2, Rational(1));
  g(0, 1) = g(1, 0) = Rational(1, 2);
  return g;
}

lattice::RationalMatrix a2_dual_gram() {
  lattice::RationalMatrix g(2, 2, Rational(4, 3));
  g(0, 1) = g(1, 0) = Rational(-2, 3);
  return g;
}

MatrixDocument d5_matrix() {
  const std::int64_t d = 5;
  MatrixDocument doc;
  doc.d = d;
  doc.matrix = exact::ExactMatrix(2, 2, Scalar::zero(d));
  doc.matrix(0, 0) = Scalar(3, 0, d);
  doc.matrix(0, 1) = Scalar(1, 1, d);
  doc.matrix(1, 0) = Scalar(1, -1, d);
  doc.matrix(1, 1) = Scalar(2, 0, d);
  return doc;
}

Json fixture(const std::string& name) {
  if (name == "standard-M2") return algebra_json(algebra::matrix_algebra(2));
  if (name == "standard-M3") return algebra_json(algebra::matrix_algebra(3));
  if (name == "eisenstein-M2") return algebra_json(algebra::matrix_algebra(2, 3));
  if (name == "gaussian-lambda") return algebra_json(algebra::matrix_algebra(2, 1), gaussian_lambda_lattice());
  if (name == "d5-matrix") return matrix_document_json(d5_matrix());
  if (name == "A2") return lattice_json({std::nullopt, a2_gram()});
  if (name == "A2-dual") return lattice_json({std::nullopt, a2_dual_gram()});
  fail(ErrorCode::kInput, "unknown fixture \"" + name + "\"");
}

}  // namespace matsplit::io
