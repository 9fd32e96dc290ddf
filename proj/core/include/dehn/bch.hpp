#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dehn/graded_lie.hpp"
#include "dehn/linalg.hpp"

namespace dehn {

// Letters 0 = X, 1 = Y. A word w_1 ... w_m stands for the right-nested
// bracket [w_1, [w_2, ..., [w_{m-1}, w_m]...]].
using LieWord = std::vector<int>;

// Dynkin's expansion of log(exp X exp Y) through words of length <= max_length,
// with coefficients of equal words combined and vanishing brackets dropped.
const std::map<LieWord, Rational>& dynkin_terms(std::size_t max_length);

// Group law x * y = log(exp x exp y) on a nilpotent algebra, truncated at its
// nilpotency length. Throws NotNilpotent.
Vector bch_product(const GradedLieAlgebra& g, const Vector& x, const Vector& y);
// Explicit truncation degree, for callers that already know it.
Vector bch_product(const GradedLieAlgebra& g, const Vector& x, const Vector& y, std::size_t degree);

// ((x, y)) = x^-1 y^-1 x y in the group law.
Vector group_commutator(const GradedLieAlgebra& g, const Vector& x, const Vector& y);
// ((x_1, ..., x_n)) = ((x_1, ((x_2, ..., x_n)))).
Vector iterated_commutator(const GradedLieAlgebra& g, const std::vector<Vector>& xs);
// [x_1, [x_2, ..., x_n]].
Vector iterated_bracket(const GradedLieAlgebra& g, const std::vector<Vector>& xs);

// For an s-nilpotent algebra and s inputs, the iterated group commutator
// equals the iterated Lie bracket. Throws InvalidInput unless the algebra is
// nilpotent of length at most xs.size().
bool verify_multicom(const GradedLieAlgebra& g, const std::vector<Vector>& xs);

RationalMatrix nilpotent_exp(const RationalMatrix& x);
RationalMatrix unipotent_log(const RationalMatrix& u);
// log(exp X exp Y) for strictly upper triangular X, Y.
RationalMatrix unipotent_matrix_oracle(const RationalMatrix& x, const RationalMatrix& y);

// A faithful representation given by the images of the basis elements.
struct MatrixRealization {
  std::vector<RationalMatrix> images;

  RationalMatrix to_matrix(const Vector& v) const;
  // Coordinates of m in the span of the images. Throws InvalidInput if m is outside.
  Vector to_vector(const RationalMatrix& m) const;
};

}  // namespace dehn
