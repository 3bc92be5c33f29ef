#pragma once

#include <string>

#include "lsl/series.hpp"

namespace lsl {

// Triangle with rows by l (downward) and i decreasing left to right; each
// cell reads "codim/D" or "codim/N" for the distributivity flag.
std::string render_grid(const GridReport& rep);

}  // namespace lsl
