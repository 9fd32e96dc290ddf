#pragma once

#include <string>
#include <vector>

#include "dehn/graded_lie.hpp"
#include "dehn/weight_geometry.hpp"

namespace dehn {

struct ObstructionFlags {
  bool sol = false;
  bool sol_non_archimedean = false;
  bool homological = false;
  bool homological_non_archimedean = false;
  bool kill_zero_vanishes = false;
};

ObstructionFlags obstruction_flags(const GradedLieAlgebra& g);

enum class Verdict { Linear, Quadratic, PolyAtMostCubic, ExponentialDehn, NotCompactlyPresented };

std::string to_string(Verdict v);

struct Justification {
  std::string rule;
  std::string condition;
};

struct Classification {
  Verdict verdict = Verdict::PolyAtMostCubic;
  std::string qualifier;
  std::vector<Justification> justification;  // deciding rule first
  std::vector<std::string> caveats;
  std::vector<std::string> warnings;
  ObstructionFlags flags;
  TamenessFlags tameness;
};

// Throws InvalidInput when a_rank < 1 or the algebra fails validation.
Classification classify(const GradedLieAlgebra& g);

}  // namespace dehn
