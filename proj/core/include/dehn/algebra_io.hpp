#pragma once

#include <string>
#include <string_view>

#include "dehn/graded_lie.hpp"

namespace dehn {

// Reads the JSON algebra format. Throws ParseError on malformed input,
// unknown keys, bad rationals, unknown names or repeated bracket pairs.
// Lie-algebra axioms are not checked here; see validate().
GradedLieAlgebra parse_algebra(std::string_view text);
GradedLieAlgebra load_algebra(const std::string& path);

// Canonical JSON: sorted keys, brackets for i < j in basis order, zero
// brackets omitted, rationals as strings.
std::string serialize_algebra(const GradedLieAlgebra& g);

}  // namespace dehn
