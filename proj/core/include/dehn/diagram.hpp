#pragma once

#include <string>

#include "dehn/graded_lie.hpp"

namespace dehn {

enum class DiagramFormat { svg, ascii };

// Plot of the weights: principal weights emphasized (bold in SVG, [..] in
// ASCII), the zero weight underlined (_.._), multiplicities annotated (xN).
// Throws UnsupportedDimension unless weight_dim is 1 or 2.
std::string render_diagram(const GradedLieAlgebra& g, DiagramFormat format);

}  // namespace dehn
