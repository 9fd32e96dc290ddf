#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/classifier.hpp"
#include "dehn/graded_lie.hpp"
#include "dehn/weight_geometry.hpp"

namespace dehn {

struct WeightRow {
  Weight weight;
  std::vector<std::string> basis;
  std::vector<std::string> fields;
  std::size_t principal_multiplicity = 0;
};

struct AnalysisReport {
  std::string name;
  std::size_t dim = 0;
  std::size_t weight_dim = 0;
  std::size_t a_rank = 0;
  std::vector<WeightRow> weights;
  std::vector<std::string> principal_weights;
  TamenessFlags tameness;
  std::optional<Vector> compacting_functional;
  bool one_tame = false;
  bool doubly_one_tame = false;
  bool relatively_perfect_degree_zero = false;
  std::optional<std::size_t> nilpotency_length;
  std::size_t lambda2_dim = 0;
  std::size_t lambda3_dim = 0;
  std::size_t lambda2_tame_dim = 0;
  std::size_t lambda3_tame_dim = 0;
  std::size_t h2_dim = 0;
  std::map<std::string, std::size_t> h2_per_field;
  std::vector<std::string> h2_representatives;
  std::size_t h2_tame_dim = 0;
  bool h2_tame_onto = false;
  std::size_t kill_dim = 0;
  std::size_t kill_tame_dim = 0;
  bool prop_six = false;
  std::size_t blow_up_kernel_dim = 0;
  std::optional<Classification> classification;
  std::string classification_error;
};

// Runs every invariant. Throws InternalCheckFailure if d^2 != 0 or the
// blow-up fails its own checks.
AnalysisReport analyze(const GradedLieAlgebra& g);

std::string report_text(const AnalysisReport& r);
// Canonical JSON with sorted keys; byte-identical across runs.
std::string report_json(const AnalysisReport& r);

}  // namespace dehn
