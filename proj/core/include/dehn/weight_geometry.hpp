#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehn/graded_lie.hpp"

namespace dehn {

struct HullCertificate {
  bool contains_zero = false;
  Vector coefficients;  // convex coefficients summing to 1 with sum c_i p_i = 0
  Vector functional;    // l with l(p_i) > 0 for every point
};

// Exact decision of 0 in conv(points) with a certificate either way.
HullCertificate zero_in_convex_hull(const std::vector<Weight>& points);

// Index pairs (i < j) with p_j = -t p_i for some t > 0.
// Throws ZeroWeightPresent if a point is zero.
std::vector<std::pair<std::size_t, std::size_t>> quasi_opposite_pairs(const std::vector<Weight>& points);
bool quasi_opposite(const Weight& a, const Weight& b);

struct WeightEntry {
  Weight weight;
  std::size_t multiplicity = 0;
  std::vector<std::string> fields;
  std::size_t principal_multiplicity = 0;
  bool principal_archimedean = false;
  bool principal_non_archimedean = false;

  bool principal() const { return principal_multiplicity > 0; }
};

struct WeightSet {
  std::size_t weight_dim = 0;
  std::vector<WeightEntry> entries;  // lexicographic order of weights

  std::vector<Weight> all() const;
  std::vector<Weight> nonzero() const;
  std::vector<Weight> principal_nonzero() const;
  std::vector<Weight> principal_non_archimedean_nonzero() const;
  bool has_zero_principal() const;
};

WeightSet weight_set(const GradedLieAlgebra& g);

struct TamenessFlags {
  bool tame = false;
  bool two_tame = false;
  bool stably_two_tame = false;
};

TamenessFlags tameness_flags(const WeightSet& ws);

// A linear form positive on every weight, present exactly when the set is tame.
std::optional<Vector> compacting_functional(const WeightSet& ws);

}  // namespace dehn
