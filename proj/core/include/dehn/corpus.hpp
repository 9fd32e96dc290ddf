#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehn/bch.hpp"
#include "dehn/graded_lie.hpp"

namespace dehn {

struct CorpusEntry {
  std::string name;
  std::string description;
};

std::vector<CorpusEntry> corpus_entries();
std::vector<std::string> corpus_names();

// Also accepts "sol-lambda:P/Q". Throws InvalidInput for unknown names.
GradedLieAlgebra corpus_algebra(const std::string& name);

// Abelian R^2 with weights 1 and -lambda, lambda > 0.
GradedLieAlgebra sol_lambda(const Rational& lambda);

// Faithful matrix representation for the nilpotent entries that have one.
std::optional<MatrixRealization> matrix_realization(const std::string& name);

}  // namespace dehn
