#pragma once

#include <vector>

#include "joint.hpp"
#include "scurve/curve.hpp"
#include "scurve/gons.hpp"

namespace scurve::complete {

// A curve built around a fragment, with the word position of the edge
// realizing each fragment side.
struct Completion {
    CurveMap curve;
    std::vector<int> side_edges;
};

// Close a lone n-gon with the given directions and visit order into a curve
// in which it appears as a face.
Completion complete_raw(const RawGon& gon);
Completion complete_gon_class(const GonClass& cls);

// Close a 3-gon/5-gon joint; side_edges is indexed by the joint side ids.
Completion complete_joint(const joint::Datum& datum);

}  // namespace scurve::complete
