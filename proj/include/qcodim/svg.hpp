#pragma once

#include <string>

#include "qcodim/barcode.hpp"

namespace qcodim {

/// Renders a barcode as an SVG 1.1 document: one horizontal <line class="bar">
/// per bar instance, stacked top to bottom in entry order, over an axis
/// ticked at the critical points. Infinite endpoints run to the plot margin
/// and end in an arrowhead. Output depends only on the barcode.
std::string render_barcode_svg(const Barcode& bc);

}  // namespace qcodim
