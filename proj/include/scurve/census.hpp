#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace scurve {

// Curves grouped by crossing number, one sorted canonical code per class.
struct CensusStore {
    int max_n = 0;
    bool reduced_only = false;
    std::vector<std::vector<std::string>> codes;  // indexed by crossing number
};

// All spherical curves with at most max_n crossings, up to relabeling,
// basepoint, reversal and mirror image. With reduced_only, curves with a
// nugatory crossing are dropped.
CensusStore enumerate_curves(int max_n, bool reduced_only = false, int jobs = 1);

std::vector<std::size_t> census_counts(const CensusStore& store);

void save_census(const CensusStore& store, std::ostream& out);
void save_census(const CensusStore& store, const std::string& path);
CensusStore load_census(const std::string& path);

}  // namespace scurve
