#pragma once

#include <array>
#include <string>
#include <vector>

#include "scurve/curve.hpp"

namespace scurve {

// Chord diagram of a curve: the traversal circle with positions 0..2n-1 and
// one chord per crossing joining its two visits.
struct ChordDiagram {
    std::vector<int> position_label;         // crossing id at each circle position
    std::vector<std::array<int, 2>> chords;  // per crossing id, its two positions
    std::vector<std::string> names;
};

ChordDiagram chord_diagram(const CurveMap& curve);

// true when the chords of the two named crossings interleave on the circle
bool interleaves(const ChordDiagram& diagram, const std::string& c1, const std::string& c2);

}  // namespace scurve
