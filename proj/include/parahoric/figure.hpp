#pragma once

#include "parahoric/stratify.hpp"

#include <string>

namespace parahoric {

// Deterministic SVG rendering of the admissible alcoves for the
// rank-2 cases (GL_3 and GSp_4): one polygon per alcove, translations
// highlighted, the base alcove labeled tau.
std::string alcove_figure_svg(const DatumPtr& d, const Coweight& mu);

}  // namespace parahoric
