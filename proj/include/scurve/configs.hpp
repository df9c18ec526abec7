#pragma once

#include <array>
#include <string>
#include <vector>

#include "scurve/curve.hpp"
#include "scurve/gons.hpp"

namespace scurve {

// A 3-gon/5-gon adjacency requirement: a 3-gon of the aliased class shares
// the named side of a 5-gon of the given class.
struct Configuration {
    std::string three_gon_alias;
    char shared_side = 0;  // side letter of the 5-gon
    std::string five_gon_label;
    std::string provenance;

    bool operator==(const Configuration&) const = default;
};

struct ConfigurationSet {
    std::string name;
    std::vector<Configuration> members;

    bool operator==(const ConfigurationSet&) const = default;
};

// 5-gon classes of the given type whose canonical sequence carries the three
// side labels in the given cyclic order. Membership is read on the canonical
// member: a reflective relabeling can carry one triple to another, so the
// predicate is not constant across a class. Classes come back in canonical
// order.
std::vector<GonClass> filter_classes_by_cyclic_triple(int type_number,
                                                      const std::array<char, 3>& triple);

// The shipped 32-member set: type-2 5-gons sharing side e, type-4 sharing
// e, d or c, each list cut down by its cyclic-order filter.
ConfigurationSet build_u3_core();

// The unique 3-gon class whose joints with 5-gons reach exactly the types,
// shared-side letters and classes that build_u3_core() demands.
std::string derive_type_d_alias();

// Letter names for 3-gon and 4-gon classes: the derived "D" plus
// canonical-order defaults for the rest.
AliasTable build_alias_table();

struct ConfigurationMatch {
    int three_gon_face = 0;  // face indices into curve.faces()
    int five_gon_face = 0;
    int shared_edge = 0;

    bool operator==(const ConfigurationMatch&) const = default;
};

// All (3-gon face, 5-gon face, shared edge) triples classifying per the
// configuration, where some class-realizing labeling of the 5-gon puts the
// shared edge on the required side.
std::vector<ConfigurationMatch> match_configuration(const CurveMap& curve,
                                                    const Configuration& config,
                                                    const AliasTable& aliases);

void save_configuration_set(const ConfigurationSet& set, const std::string& path);
ConfigurationSet load_configuration_set(const std::string& path);

}  // namespace scurve
