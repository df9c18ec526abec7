// Acceptance checklist for the toolkit: eleven criteria, one line each,
// nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scurve/census.hpp"
#include "scurve/chord.hpp"
#include "scurve/common.hpp"
#include "scurve/configs.hpp"
#include "scurve/curve.hpp"
#include "scurve/gons.hpp"
#include "scurve/reference_tables.hpp"
#include "scurve/splice.hpp"
#include "scurve/verify.hpp"

namespace {

using namespace scurve;
namespace fs = std::filesystem;

std::string g_cli;
std::string g_src;
int g_failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
    if (!ok) ++g_failures;
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string command = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = rc < 0 ? rc : WEXITSTATUS(rc);
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

const CensusStore& census6() {
    static const CensusStore store = enumerate_curves(6);
    return store;
}

const CensusStore& census7() {
    static const CensusStore store = enumerate_curves(7, false, 2);
    return store;
}

// ----- criterion 1: class counts -----

void criterion_counts() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t c3 = enumerate_gon_classes(3).size();
    const std::size_t c4 = enumerate_gon_classes(4).size();
    const auto five = enumerate_gon_classes(5);
    std::map<int, int> split;
    for (const GonClass& cls : five) ++split[cls.type_number];
    const double dt = seconds_since(t0);
    const bool counts_ok = c3 == 4 && c4 == 13 && five.size() == 56 &&
                           split == std::map<int, int>{{1, 8}, {2, 16}, {3, 16}, {4, 16}};
    const RunResult cli = run_cli("atlas --n 5");
    const bool cli_ok =
        cli.status == 0 && cli.out.find("classes=56 types 8/16/16/16\n") != std::string::npos;
    report(1, counts_ok && cli_ok && dt < 1.0,
           "gon classes 4/13/56, 5-gon type split 8/16/16/16, " + fmt_seconds(dt));
}

// ----- criterion 2: orbit lists match the reference tables -----

void criterion_orbit_lists() {
    auto aligns = type_assignment(5);
    std::sort(aligns.begin(), aligns.end(),
              [](const TypeAlignment& a, const TypeAlignment& b) {
                  return a.type_number < b.type_number;
              });
    const auto& tables = reference::five_gon_class_tables();
    int substitutions = 0;
    bool ok = true;
    for (const TypeAlignment& ta : aligns) {
        std::set<std::set<std::string>> computed;
        for (const auto& cls : sequence_classes(ta.pattern))
            computed.insert({cls.begin(), cls.end()});
        const auto& listed = tables[ta.type_number - 1];
        if (computed.size() != listed.size()) ok = false;
        for (const auto& ref_class : listed) {
            std::set<std::string> members;
            for (std::string m : ref_class) {
                if (m == reference::kMisprintMember) {
                    m = reference::kMisprintActual;
                    ++substitutions;
                }
                members.insert(m);
            }
            if (!computed.count(members)) ok = false;
        }
        if (ta.type_number == 1) {
            for (const char* s : {"acebd", "adbec", "aedcb"})
                if (!computed.count({std::string(s)})) ok = false;
            if (!computed.count({"abced", "abdce", "acbde", "acdeb", "aebcd"})) ok = false;
        }
    }
    ok = ok && substitutions == 1;
    report(2, ok,
           "all 56 reference orbits match as partitions; known typo acdba flagged, orbit "
           "member acdbe");
}

// ----- criterion 3: worked identities -----

void criterion_identities() {
    const bool ok = apply_symmetry({false, 1, false}, "abced", 5) == "aebcd" &&
                    apply_symmetry({true, 0, true}, "abced", 5) == "acbde" &&
                    apply_symmetry({true, 3, true}, "abced", 5) == "aebcd";
    report(3, ok,
           "rotation sends abced to aebcd; the two reversal-reflections give acbde and aebcd");
}

// ----- criterion 4: cyclic filters and the core set -----

void criterion_filters() {
    const auto t0 = std::chrono::steady_clock::now();
    auto labels = [](const std::vector<GonClass>& classes) {
        std::vector<std::string> out;
        for (const GonClass& c : classes) out.push_back(c.label);
        return out;
    };
    const bool lists_ok =
        labels(filter_classes_by_cyclic_triple(2, {'a', 'e', 'd'})) ==
            reference::shared_side_e_type2() &&
        labels(filter_classes_by_cyclic_triple(4, {'a', 'e', 'd'})) ==
            reference::shared_side_e_type4() &&
        labels(filter_classes_by_cyclic_triple(4, {'c', 'd', 'e'})) ==
            reference::shared_side_d_type4() &&
        labels(filter_classes_by_cyclic_triple(4, {'b', 'd', 'c'})) ==
            reference::shared_side_c_type4();
    const ConfigurationSet core = build_u3_core();
    bool types_ok = core.members.size() == 32;
    for (const Configuration& m : core.members)
        if (m.five_gon_label[0] != '2' && m.five_gon_label[0] != '4') types_ok = false;
    const double dt = seconds_since(t0);
    report(4, lists_ok && types_ok && dt < 1.0,
           "filters list 8/7/8/9 classes with the reference labels; core set has 32 members on "
           "5-gon types 2 and 4, " +
               fmt_seconds(dt));
}

// ----- criteria 5-8: census-wide lemma checks -----

void criterion_bound(const AliasTable& aliases, const ConfigurationSet& configs) {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckReport rep = verify_lemma(census6(), "bound", aliases, configs);
    report(5, rep.ok() && rep.pass == 480,
           "reductivity <= 4 with no exceeds-cap on all " + std::to_string(rep.pass) +
               " nontrivial curves, n <= 6, " + fmt_seconds(seconds_since(t0)));
}

void criterion_ast(const AliasTable& aliases, const ConfigurationSet& configs) {
    const CheckReport rep = verify_lemma(census6(), "ast", aliases, configs);
    report(6, rep.ok() && rep.pass == 9,
           "every nontrivial reduced census curve (n <= 6) has a 2-gon or 3-gon; pass=" +
               std::to_string(rep.pass) + " fail=" + std::to_string(rep.fail));
}

void criterion_implications(const AliasTable& aliases, const ConfigurationSet& configs) {
    const CheckReport abc = verify_lemma(census6(), "abc-implication", aliases, configs);
    const CheckReport quad = verify_lemma(census6(), "4a-implication", aliases, configs);
    auto stat = [](const CheckReport& r) {
        return r.vacuously_consistent()
                   ? std::string("vacuously consistent")
                   : "pass=" + std::to_string(r.pass) + " vacuous=" + std::to_string(r.vacuous);
    };
    report(7, abc.ok() && quad.ok(),
           "abc-implication " + stat(abc) + "; 4a-implication " + stat(quad) +
               " (conditional on the 4a alias default)");
}

void criterion_u3_local(const AliasTable& aliases, const ConfigurationSet& configs) {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckReport rep = verify_lemma(census7(), "u3-local", aliases, configs);
    const std::string stat = rep.vacuously_consistent()
                                 ? std::string("vacuously consistent")
                                 : "pass=" + std::to_string(rep.pass);
    report(8, rep.ok(),
           "every D-3-gon/5-gon sharing (n <= 7) is listed, type-2 5-gons share only via e; " +
               stat + " vacuous=" + std::to_string(rep.vacuous) + ", " +
               fmt_seconds(seconds_since(t0)));
}

// ----- criterion 9: oracle equivalences -----

void brute_pairings(std::vector<int>& word, int next_label, std::set<std::string>& out) {
    int p = -1;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] < 0) {
            p = static_cast<int>(i);
            break;
        }
    if (p < 0) {
        const int n = static_cast<int>(word.size()) / 2;
        std::vector<bool> neg(n, false);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int c = 0; c < n; ++c) neg[c] = (mask >> c) & 1u;
            CurveMap curve;
            if (CurveMap::try_from_word(word, neg, curve)) out.insert(curve.canonical());
        }
        return;
    }
    word[p] = next_label;
    for (std::size_t q = p + 1; q < word.size(); ++q) {
        if (word[q] >= 0) continue;
        word[q] = next_label;
        brute_pairings(word, next_label + 1, out);
        word[q] = -1;
    }
    word[p] = -1;
}

constexpr int kNoDescent = 99;

int naive_reductivity(const CurveMap& curve, int cap) {
    if (is_reducible(curve)) return 0;
    if (cap == 0) return kNoDescent;
    int best = kNoDescent;
    for (const std::string& name : curve.names())
        best = std::min(best, 1 + naive_reductivity(hs_inverse(curve, name), cap - 1));
    return std::min(best, kNoDescent);
}

void criterion_oracles() {
    // (a) an independent generator: all pairings of 2n positions, all sign masks
    std::set<std::string> brute;
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> word(2 * n, -1);
        brute_pairings(word, 0, brute);
    }
    std::set<std::string> census;
    const CensusStore five = enumerate_curves(5);
    for (int n = 1; n <= 5; ++n) census.insert(five.codes[n].begin(), five.codes[n].end());
    const bool dual_ok = brute == census;

    // (b) chord-based vs face-based nugatory crossings on every census curve
    bool nugatory_ok = true;
    for (const auto& section : census6().codes)
        for (const std::string& code : section) {
            const CurveMap curve = CurveMap::parse(code);
            const ChordDiagram diagram = chord_diagram(curve);
            std::vector<std::string> by_chord, by_face;
            for (int c = 0; c < curve.crossings(); ++c) {
                bool lone = true;
                for (int o = 0; o < curve.crossings(); ++o)
                    if (o != c && interleaves(diagram, curve.name(c), curve.name(o)))
                        lone = false;
                if (lone) by_chord.push_back(curve.name(c));
            }
            for (int c = 0; c < curve.crossings(); ++c) {
                bool twice = false;
                for (const FacePolygon& f : curve.faces()) {
                    const int hits =
                        static_cast<int>(std::count(f.corners.begin(), f.corners.end(), c));
                    if (hits >= 2) twice = true;
                }
                if (twice) by_face.push_back(curve.name(c));
            }
            std::sort(by_chord.begin(), by_chord.end());
            std::sort(by_face.begin(), by_face.end());
            if (by_chord != by_face || by_chord != nugatory_crossings(curve))
                nugatory_ok = false;
        }

    // (c) BFS reductivity vs plain exhaustive descent for n <= 4
    bool naive_ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const std::string& code : census6().codes[n]) {
            const CurveMap curve = CurveMap::parse(code);
            const int direct = naive_reductivity(curve, 4);
            const ReductivityResult r = reductivity(curve, 4);
            if (direct == kNoDescent ? !r.exceeds_cap : (r.exceeds_cap || r.value != direct))
                naive_ok = false;
        }

    report(9, dual_ok && nugatory_ok && naive_ok,
           "independent word generator agrees (n <= 5); chord and face nugatory tests agree "
           "(n <= 6); exhaustive descent matches (n <= 4)");
}

// ----- criterion 10: worked small cases -----

void criterion_small_cases() {
    const CurveMap trefoil = parse_signed_code("a- b+ c- a- b+ c-");
    std::multiset<int> sizes;
    for (const FacePolygon& f : trefoil.faces()) sizes.insert(f.size());
    const ReductivityResult tr = reductivity(trefoil, 4);
    bool ok = trefoil.faces().size() == 5 && sizes == std::multiset<int>{2, 2, 2, 3, 3} &&
              is_reduced(trefoil) && !tr.exceeds_cap && tr.value == 1;

    const CurveMap curl = parse_signed_code("a+ a+");
    const ReductivityResult cr = reductivity(curl, 4);
    ok = ok && is_reducible(curl) && !cr.exceeds_cap && cr.value == 0;

    bool splice_ok = true;
    const CensusStore five = enumerate_curves(5);
    for (int n = 1; n <= 5; ++n)
        for (const std::string& code : five.codes[n]) {
            const CurveMap curve = CurveMap::parse(code);
            for (const std::string& name : curve.names()) {
                const CurveMap out = hs_inverse(curve, name);
                if (out.crossings() != n - 1 || genus(out) != 0 ||
                    out.length() != 2 * (n - 1))
                    splice_ok = false;
            }
        }
    report(10, ok && splice_ok,
           "standard curve faces, reductivities 1 and 0; every splice drops one crossing and "
           "keeps a single genus-0 curve (n <= 5)");
}

// ----- criterion 11: the theorem search -----

void criterion_search(const AliasTable& aliases) {
    const auto witnesses = theorem1_search(census7(), aliases);
    std::string detail;
    bool ok = true;
    if (witnesses.empty()) {
        detail = "no reduced curve without 2-gons and with only D 3-gons up to n = 7";
    } else {
        int minimal = census7().max_n + 1;
        for (const Theorem1Witness& w : witnesses) {
            const CurveMap curve = CurveMap::parse(w.code);
            minimal = std::min(minimal, curve.crossings());
            if (curve.trivial() || !is_reduced(curve)) ok = false;
        }
        detail = std::to_string(witnesses.size()) +
                 " witnesses, minimal crossing number " + std::to_string(minimal) +
                 ", first reductivity " + std::to_string(witnesses.front().reductivity_value);
    }

    const fs::path path = fs::temp_directory_path() / "scurve_acceptance_census7.txt";
    save_census(census7(), path.string());
    const RunResult cli = run_cli("verify --census " + path.string() + " --check thm1");
    fs::remove(path);
    ok = ok && cli.status == 0 &&
         cli.out.find("RESULT pass=" + std::to_string(witnesses.size()) + " fail=0") !=
             std::string::npos;
    if (witnesses.empty()) ok = ok && cli.out.find("none up to 7") != std::string::npos;
    report(11, ok, detail + "; tool report agrees");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-path> <source-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_src = argv[2];
    try {
        criterion_counts();
        criterion_orbit_lists();
        criterion_identities();
        const AliasTable aliases = load_alias_table(g_src + "/data/aliases.conf");
        const ConfigurationSet configs = load_configuration_set(g_src + "/data/u3_core.conf");
        criterion_filters();
        criterion_bound(aliases, configs);
        criterion_ast(aliases, configs);
        criterion_implications(aliases, configs);
        criterion_u3_local(aliases, configs);
        criterion_oracles();
        criterion_small_cases();
        criterion_search(aliases);
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << std::endl;
        return 2;
    }
    std::cout << (g_failures == 0 ? "acceptance: all 11 criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criteria FAILED")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
