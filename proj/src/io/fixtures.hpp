#pragma once

#include <string>
#include <vector>

#include "io/json.hpp"

namespace matsplit::io {

std::vector<std::string> fixture_names();

// Throws kInput for an unknown name.
Json fixture(const std::string& name);

// O_K-basis of the Gaussian order of 2 x 2 matrices whose identity is a shortest element.
std::vector<algebra::Element> gaussian_lambda_ok_basis();
// The same order as a Z-lattice in restricted coordinates of M_2(Q(i)).
exact::ZLattice gaussian_lambda_lattice();

lattice::RationalMatrix a2_gram();
lattice::RationalMatrix a2_dual_gram();

// [[3, 1 + sqrt(-5)], [1 - sqrt(-5), 2]].
MatrixDocument d5_matrix();

}  // namespace matsplit::io
