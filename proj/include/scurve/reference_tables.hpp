#pragma once

#include <string>
#include <vector>

namespace scurve::reference {

// 5-gon sequence-class tables, one list per orientation type 1..4, each class
// given by its member sequences. The type-1 table is reproduced verbatim and
// contains a known typo in the reference data: "acdba" where the orbit member
// is "acdbe".
const std::vector<std::vector<std::vector<std::string>>>& five_gon_class_tables();

extern const char* const kMisprintMember;  // "acdba", as printed
extern const char* const kMisprintActual;  // "acdbe", the orbit member

// Class labels of 5-gons that can share a side with a 3-gon of type D,
// grouped by the shared side letter.
const std::vector<std::string>& shared_side_e_type2();
const std::vector<std::string>& shared_side_e_type4();
const std::vector<std::string>& shared_side_d_type4();
const std::vector<std::string>& shared_side_c_type4();

}  // namespace scurve::reference
