#pragma once

#include "bullcol/certificate.hpp"
#include "bullcol/hole.hpp"

namespace bullcol {

/// Colours a (bull,chair)-free block around its smallest odd hole, or returns
/// the necklace that blocks a colouring. Pre: validated chair-mode classification.
Certificate solve_chair(const Graph& g, const Classification& cls);

} // namespace bullcol
