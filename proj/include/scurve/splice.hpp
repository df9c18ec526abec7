#pragma once

#include <string>
#include <vector>

#include "scurve/curve.hpp"

namespace scurve {

// Crossings whose chord interleaves no other chord (equivalently, some face
// meets the crossing at two of its corners). Sorted by name.
std::vector<std::string> nugatory_crossings(const CurveMap& curve);

bool is_reducible(const CurveMap& curve);  // has a nugatory crossing
bool is_reduced(const CurveMap& curve);    // trivial counts as reduced

// Inverse half-twisted splice at the named crossing: delete the crossing and
// rejoin its four dart ends by the one rotation-adjacent pairing that keeps
// the curve a single component.
CurveMap hs_inverse(const CurveMap& curve, const std::string& crossing);

struct ReductivityResult {
    int value = 0;             // least k such that k splices reach a reducible curve
    bool exceeds_cap = false;  // no reducible curve within the cap
    int cap = 0;
    // canonical crossing labels of one shortest descent; entry k names a
    // crossing of the canonical form after k splices
    std::vector<std::string> witness;
};

ReductivityResult reductivity(const CurveMap& curve, int cap = 4);

}  // namespace scurve
