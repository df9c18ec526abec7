#pragma once

#include <string>

#include "scurve/chord.hpp"

namespace scurve {

// Plain-text rendering: the position row, one line per chord, and the
// interleavement matrix. With side_arcs, positions 2j and 2j+1 bound the
// j-th side arc and get listed too.
std::string chord_text(const ChordDiagram& diagram, bool side_arcs = false);

// Standalone SVG document with the chords drawn across the circle. With
// side_arcs, the boundary arcs between positions 2j and 2j+1 are thickened.
std::string chord_svg(const ChordDiagram& diagram, bool side_arcs = false);

}  // namespace scurve
