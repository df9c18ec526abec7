#pragma once

#include <string>
#include <vector>

#include "scurve/census.hpp"
#include "scurve/configs.hpp"
#include "scurve/gons.hpp"

namespace scurve {

// Outcome of one lemma check over a census: curves meeting the hypothesis
// count as pass or fail, the rest as vacuous.
struct CheckReport {
    std::string id;
    int pass = 0;
    int fail = 0;
    int vacuous = 0;
    std::vector<std::string> notes;

    bool ok() const { return fail == 0; }
    bool vacuously_consistent() const { return pass == 0 && fail == 0; }
};

// Lemma ids: "ast" (every nontrivial reduced curve has a 2-gon or 3-gon),
// "abc-implication" (a 2-gon or non-D 3-gon forces reductivity <= 3),
// "4a-implication" (a 4a 4-gon forces reductivity <= 3), "bound"
// (reductivity <= 4), "u3-local" (every D-3-gon/5-gon side sharing lands in
// the configuration set).
CheckReport verify_lemma(const CensusStore& census, const std::string& lemma_id,
                         const AliasTable& aliases, const ConfigurationSet& configs);

struct Theorem1Witness {
    std::string code;
    int reductivity_value = 0;
    bool exceeds_cap = false;
};

// Reduced nontrivial curves without 2-gons whose 3-gons all carry the D
// alias, with their reductivities.
std::vector<Theorem1Witness> theorem1_search(const CensusStore& census,
                                             const AliasTable& aliases);

}  // namespace scurve
