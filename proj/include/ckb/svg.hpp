#pragma once

#include <string>

#include "ckb/trees.hpp"

namespace ckb {

// Renders the dissection as an SVG: regular polygon inscribed in the unit
// circle, vertex 0 at angle -pi/2, marked edge between vertices 0 and 1
// drawn bold, cells filled black/white by the checkerboard colouring.
// Deterministic output: fixed ordering and number formatting.
std::string dissection_svg(const DissectionTree& tree);

}  // namespace ckb
