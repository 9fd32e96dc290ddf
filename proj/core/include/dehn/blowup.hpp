#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehn/graded_lie.hpp"
#include "dehn/linalg.hpp"

namespace dehn {

// g~ agrees with g in nonzero degrees and has g~_0 = (g ^ g)_0 / d_3((g^g^g)_0).
// Basis of g~: the nonzero-degree basis elements of g in their original
// order, then one class x^y per non-pivot column of the reduced echelon form
// of the boundaries. tau is the homomorphism g~ -> g (x -> x off degree 0,
// x^y -> [x, y]).
struct BlowUpResult {
  GradedLieAlgebra source;
  GradedLieAlgebra blown_up;
  RationalMatrix tau;                // dim g rows, dim g~ columns
  std::vector<Vector> kernel_basis;  // in g~ coordinates
  std::size_t kernel_dim = 0;
};

BlowUpResult blow_up(const GradedLieAlgebra& g);

// g_0 is contained in [g, g].
bool is_relatively_perfect_degree_zero(const GradedLieAlgebra& g);

struct BlowUpCheck {
  bool jacobi = false;
  bool tau_homomorphism = false;
  bool kernel_central = false;
  bool kernel_matches_h2 = false;
  bool image_matches = false;               // tau(g~) = g' + [g, g]
  bool one_tameness_preserved = false;      // vacuous unless g is 1-tame
  std::optional<bool> second_blowup_trivial;  // only for relatively perfect g
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

BlowUpCheck verify_blow_up(const BlowUpResult& result);

}  // namespace dehn
