#include "scurve/verify.hpp"

#include <algorithm>
#include <numeric>

#include "scurve/common.hpp"
#include "scurve/splice.hpp"

namespace scurve {

namespace {

constexpr int kNoteLimit = 12;

void note(CheckReport& rep, const std::string& text) {
    if (static_cast<int>(rep.notes.size()) < kNoteLimit) rep.notes.push_back(text);
}

RawGon raw_of(const FacePolygon& face) {
    RawGon raw;
    raw.n = face.size();
    raw.bits = face.directions;
    raw.visit.resize(face.size());
    std::iota(raw.visit.begin(), raw.visit.end(), 0);
    std::sort(raw.visit.begin(), raw.visit.end(),
              [&](int x, int y) { return face.sides[x] < face.sides[y]; });
    return raw;
}

bool has_two_or_three_gon(const std::vector<FacePolygon>& fs) {
    return std::any_of(fs.begin(), fs.end(),
                       [](const FacePolygon& f) { return f.size() == 2 || f.size() == 3; });
}

// Face carrying one of the given alias letters. Only polygonal faces
// classify; others never match.
bool has_aliased_gon(const CurveMap& curve, const std::vector<FacePolygon>& fs, int n,
                     const std::vector<std::string>& letters, const AliasTable& aliases) {
    for (const FacePolygon& f : fs) {
        if (f.size() != n || !f.polygonal) continue;
        const std::string letter = alias(aliases, classify_gon(curve, f));
        if (std::find(letters.begin(), letters.end(), letter) != letters.end()) return true;
    }
    return false;
}

template <typename Hypothesis, typename Conclusion>
void run_over(const CensusStore& census, CheckReport& rep, Hypothesis&& hyp,
              Conclusion&& con) {
    for (const auto& section : census.codes)
        for (const std::string& code : section) {
            const CurveMap curve = CurveMap::parse(code);
            if (!hyp(curve)) {
                ++rep.vacuous;
            } else if (con(curve)) {
                ++rep.pass;
            } else {
                ++rep.fail;
                note(rep, "counterexample: " + (code.empty() ? "trivial curve" : code));
            }
        }
}

CheckReport check_ast(const CensusStore& census) {
    CheckReport rep;
    rep.id = "ast";
    run_over(
        census, rep,
        [](const CurveMap& c) { return !c.trivial() && is_reduced(c); },
        [](const CurveMap& c) { return has_two_or_three_gon(c.faces()); });
    return rep;
}

CheckReport check_bound(const CensusStore& census) {
    CheckReport rep;
    rep.id = "bound";
    int max_seen = 0;
    run_over(
        census, rep, [](const CurveMap& c) { return !c.trivial(); },
        [&](const CurveMap& c) {
            const ReductivityResult r = reductivity(c, 4);
            if (r.exceeds_cap) return false;
            max_seen = std::max(max_seen, r.value);
            return true;
        });
    note(rep, "largest reductivity seen: " + std::to_string(max_seen));
    return rep;
}

CheckReport check_implication(const CensusStore& census, const std::string& id,
                              const AliasTable& aliases) {
    CheckReport rep;
    rep.id = id;
    const bool abc = id == "abc-implication";
    run_over(
        census, rep,
        [&](const CurveMap& c) {
            const auto fs = c.faces();
            if (abc)
                return std::any_of(fs.begin(), fs.end(),
                                   [](const FacePolygon& f) { return f.size() == 2; }) ||
                       has_aliased_gon(c, fs, 3, {"A", "B", "C"}, aliases);
            return has_aliased_gon(c, fs, 4, {"4a"}, aliases);
        },
        [](const CurveMap& c) {
            const ReductivityResult r = reductivity(c, 4);
            return !r.exceeds_cap && r.value <= 3;
        });
    if (abc) {
        note(rep, "reads A, B, C as the 3-gon classes other than the derived D");
    } else {
        const AliasEntry* entry = aliases.find_letter(4, "4a");
        check(entry != nullptr, "alias table lacks a 4a entry");
        if (!entry->derived)
            note(rep, "conditional on alias table: 4a = " + entry->label +
                          " is a positional default");
    }
    return rep;
}

// Every side shared between a D 3-gon and a 5-gon must land in the
// configuration set: some member carries the 5-gon's class and a side letter
// the shared position can realize. Type-2 5-gons must realize exactly side e
// there.
CheckReport check_u3_local(const CensusStore& census, const AliasTable& aliases,
                           const ConfigurationSet& configs) {
    CheckReport rep;
    rep.id = "u3-local";
    for (const auto& section : census.codes)
        for (const std::string& code : section) {
            const CurveMap curve = CurveMap::parse(code);
            const auto fs = curve.faces();
            int instances = 0;
            int bad = 0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                if (fs[i].size() != 3 || !fs[i].polygonal) continue;
                if (alias(aliases, classify_gon(curve, fs[i])) != "D") continue;
                for (std::size_t j = 0; j < fs.size(); ++j) {
                    if (fs[j].size() != 5 || !fs[j].polygonal) continue;
                    const GonClass cls = classify_gon(curve, fs[j]);
                    const RawGon raw = raw_of(fs[j]);
                    for (int p = 0; p < 5; ++p) {
                        if (std::find(fs[i].sides.begin(), fs[i].sides.end(),
                                      fs[j].sides[p]) == fs[i].sides.end())
                            continue;
                        ++instances;
                        const std::vector<char> letters = realized_letters(raw, p);
                        const bool listed = std::any_of(
                            configs.members.begin(), configs.members.end(),
                            [&](const Configuration& m) {
                                return m.five_gon_label == cls.label &&
                                       std::find(letters.begin(), letters.end(),
                                                 m.shared_side) != letters.end();
                            });
                        const bool e_only =
                            cls.type_number != 2 || letters == std::vector<char>{'e'};
                        if (!listed || !e_only) {
                            ++bad;
                            note(rep, "unlisted sharing in " + code + ": 5-gon " + cls.label +
                                          " via letters {" +
                                          std::string(letters.begin(), letters.end()) + "}");
                        }
                    }
                }
            }
            if (instances == 0)
                ++rep.vacuous;
            else if (bad == 0)
                ++rep.pass;
            else
                ++rep.fail;
        }
    return rep;
}

}  // namespace

CheckReport verify_lemma(const CensusStore& census, const std::string& lemma_id,
                         const AliasTable& aliases, const ConfigurationSet& configs) {
    if (lemma_id == "ast") return check_ast(census);
    if (lemma_id == "bound") return check_bound(census);
    if (lemma_id == "abc-implication" || lemma_id == "4a-implication")
        return check_implication(census, lemma_id, aliases);
    if (lemma_id == "u3-local") return check_u3_local(census, aliases, configs);
    throw Error("unknown lemma id: " + lemma_id);
}

std::vector<Theorem1Witness> theorem1_search(const CensusStore& census,
                                             const AliasTable& aliases) {
    std::vector<Theorem1Witness> out;
    for (const auto& section : census.codes)
        for (const std::string& code : section) {
            const CurveMap curve = CurveMap::parse(code);
            if (curve.trivial() || !is_reduced(curve)) continue;
            bool candidate = true;
            for (const FacePolygon& f : curve.faces()) {
                if (f.size() == 2) candidate = false;
                if (f.size() == 3 &&
                    (!f.polygonal || alias(aliases, classify_gon(curve, f)) != "D"))
                    candidate = false;
                if (!candidate) break;
            }
            if (!candidate) continue;
            const ReductivityResult r = reductivity(curve, 4);
            out.push_back({code, r.value, r.exceeds_cap});
        }
    return out;
}

}  // namespace scurve
