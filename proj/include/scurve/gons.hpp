#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scurve/chord.hpp"
#include "scurve/curve.hpp"

namespace scurve {

// Direction data of an n-gon face: bits[p] is 1 when the curve runs along
// side p in the boundary direction. Sides are indexed 0..n-1 in boundary
// order and named by the letters a, b, c, ...; corner k sits between sides
// k-1 and k.
struct DirectionPattern {
    int n = 0;
    std::vector<std::uint8_t> bits;

    bool operator==(const DirectionPattern&) const = default;
};

// Side relabeling: rotation p -> p+k or reflection p -> k-p, optionally
// composed with reversal of the curve orientation (gamma). Reflections and
// gamma each flip every direction bit.
struct SymmetryElement {
    bool reflection = false;
    int k = 0;
    bool gamma = false;

    bool operator==(const SymmetryElement&) const = default;
};

// Side letters in curve-visit order, rotated to start at 'a'.
using StandardSequence = std::string;

struct GonClass {
    int n = 0;
    int type_number = 0;
    StandardSequence canonical_sequence;  // least sequence in the class
    std::string label;                    // "<type><sequence>"
    std::string alias;                    // letter name when a table assigns one

    bool operator==(const GonClass&) const = default;
};

// An n-gon cut out of a curve: side direction bits in boundary order plus the
// temporal order in which the curve visits the side positions.
struct RawGon {
    int n = 0;
    std::vector<std::uint8_t> bits;
    std::vector<int> visit;
};

int symmetry_image(const SymmetryElement& elem, int position, int n);
StandardSequence normalize_sequence(const StandardSequence& seq);
std::string apply_letter_map(const SymmetryElement& elem, const std::string& seq, int n);
StandardSequence apply_symmetry(const SymmetryElement& elem, const StandardSequence& seq, int n);
DirectionPattern apply_to_pattern(const SymmetryElement& elem, const DirectionPattern& pattern);

// Greatest bit string reachable from the pattern by relabelings; a class
// invariant usable as an orbit key.
std::string pattern_orbit_code(const DirectionPattern& pattern);

std::vector<DirectionPattern> orientation_types(int n);
std::vector<SymmetryElement> pattern_group(const DirectionPattern& pattern);
std::vector<std::vector<StandardSequence>> sequence_classes(const DirectionPattern& pattern);

// A pattern class together with the side labeling the class tables use.
struct TypeAlignment {
    int type_number = 0;
    DirectionPattern pattern;
};
std::vector<TypeAlignment> type_assignment(int n);

GonClass classify_raw(const RawGon& gon);
// Letters a given side position can carry across all valid labelings.
std::vector<char> realized_letters(const RawGon& gon, int position);
GonClass classify_gon(const CurveMap& curve, const FacePolygon& face);
std::vector<GonClass> enumerate_gon_classes(int n);

// Chord-diagram fragment of a class: circle positions 2j and 2j+1 bound the
// arc of the j-th visited side, position labels give the corner at each arc
// end, and the two occurrences of each corner are joined by a chord.
ChordDiagram gon_chord_presentation(const GonClass& cls);

struct AliasEntry {
    int n = 0;
    std::string label;
    std::string letter;
    bool derived = false;
};

struct AliasTable {
    std::vector<AliasEntry> entries;

    const AliasEntry* find(int n, const std::string& label) const;
    const AliasEntry* find_letter(int n, const std::string& letter) const;
};

std::string alias(const AliasTable& table, const GonClass& cls);
AliasTable load_alias_table(const std::string& path);
void save_alias_table(const AliasTable& table, const std::string& path);

}  // namespace scurve
