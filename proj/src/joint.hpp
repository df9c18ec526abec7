#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace scurve::joint {

// A 3-gon and a 5-gon sharing exactly one side. Side ids: 0 is the shared
// side, 1..4 the remaining 5-gon sides in boundary order, 5..6 the remaining
// 3-gon sides in boundary order. The two faces traverse the shared side in
// opposite boundary directions, and at each end of the shared side the two
// non-shared sides meeting there continue each other through the crossing.
// order is the cyclic sequence in which the curve visits the seven sides,
// normalized to start at the shared side.
struct Datum {
    std::array<std::uint8_t, 5> g_bits;  // sides 0, 1, 2, 3, 4
    std::array<std::uint8_t, 3> t_bits;  // sides 0, 5, 6
    std::array<int, 7> order;
};

std::vector<Datum> enumerate();

std::vector<int> g_visit(const Datum& d);  // 5-gon visit order over positions 0..4
std::vector<int> t_visit(const Datum& d);  // 3-gon visit order over positions 0..2

// Roles of the 5-gon pattern classes, derived from the joint enumeration:
// the 3-gon classes pairing with exactly two of the three reflective 5-gon
// shapes all pair with the same two, one through its axis side only and the
// other through the axis side and both neighbours.
struct Binding {
    std::vector<std::string> d_candidates;  // those 3-gon classes
    std::string axis_shape;                 // orbit code of the axis-only shape
    std::string wide_shape;                 // orbit code of the axis-and-neighbours shape
    std::string other_shape;                // the remaining reflective shape
};

const Binding& binding();

}  // namespace scurve::joint
