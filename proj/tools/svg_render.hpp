#pragma once

#include <string>
#include <vector>

#include "juggle/card.hpp"

namespace juggle {

/// Schematic SVG strip of card diagrams: stacked rounded tracks on both
/// sides, the hand at the bottom, surviving tracks shaded on the right,
/// and one strand per moving group.
std::string render_cards_svg(const std::vector<card>& cards);

}  // namespace juggle
