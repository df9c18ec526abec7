#include "scurve/configs.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "joint.hpp"
#include "scurve/common.hpp"

namespace scurve {
namespace {

bool has_cyclic_triple(const StandardSequence& seq, const std::array<char, 3>& triple) {
    int pos[3] = {-1, -1, -1};
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        for (int k = 0; k < 3; ++k)
            if (seq[i] == triple[k]) pos[k] = i;
    const int n = static_cast<int>(seq.size());
    check(pos[0] >= 0 && pos[1] >= 0 && pos[2] >= 0, "triple letter missing from sequence");
    return (pos[1] - pos[0] + n) % n < (pos[2] - pos[0] + n) % n;
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

// Per 3-gon class, the 5-gon types reachable through a shared side, with the
// side letters the shared side can realize and the 5-gon classes that occur.
struct SharingProfile {
    std::map<int, std::set<char>> letters;
    std::map<int, std::set<std::string>> classes;
};

std::map<std::string, SharingProfile> sharing_profiles() {
    std::map<std::string, SharingProfile> profiles;
    for (const GonClass& cls : enumerate_gon_classes(3)) profiles[cls.label];
    for (const joint::Datum& d : joint::enumerate()) {
        const RawGon traw{3, {d.t_bits.begin(), d.t_bits.end()}, joint::t_visit(d)};
        const RawGon graw{5, {d.g_bits.begin(), d.g_bits.end()}, joint::g_visit(d)};
        const GonClass t = classify_raw(traw);
        const GonClass g = classify_raw(graw);
        SharingProfile& p = profiles.at(t.label);
        for (char letter : realized_letters(graw, 0)) p.letters[g.type_number].insert(letter);
        p.classes[g.type_number].insert(g.label);
    }
    return profiles;
}

}  // namespace

std::vector<GonClass> filter_classes_by_cyclic_triple(int type_number,
                                                      const std::array<char, 3>& triple) {
    for (char c : triple) check(c >= 'a' && c <= 'e', "triple labels must be 5-gon sides");
    check(triple[0] != triple[1] && triple[0] != triple[2] && triple[1] != triple[2],
          "triple labels must be distinct");
    const DirectionPattern* pattern = nullptr;
    const auto aligns = type_assignment(5);
    for (const TypeAlignment& ta : aligns)
        if (ta.type_number == type_number) pattern = &ta.pattern;
    check(pattern != nullptr, "no such 5-gon type");

    // The cyclic condition is read on the canonical member: a reflective
    // relabeling of a class can carry one triple to another (aed and bdc
    // trade places on type-4 classes), so membership is defined through the
    // representative.
    std::vector<GonClass> out;
    for (const auto& members : sequence_classes(*pattern)) {
        const StandardSequence canon = *std::min_element(members.begin(), members.end());
        if (!has_cyclic_triple(canon, triple)) continue;
        out.push_back({5, type_number, canon, std::to_string(type_number) + canon, ""});
    }
    std::sort(out.begin(), out.end(), [](const GonClass& a, const GonClass& b) {
        return a.canonical_sequence < b.canonical_sequence;
    });
    return out;
}

ConfigurationSet build_u3_core() {
    ConfigurationSet set;
    set.name = "U3-core";
    auto add = [&](int type, std::array<char, 3> triple, char side) {
        const std::string why = std::string("cyclic ") + triple[0] + triple[1] + triple[2];
        for (const GonClass& cls : filter_classes_by_cyclic_triple(type, triple))
            set.members.push_back({"D", side, cls.label, why});
    };
    add(2, {'a', 'e', 'd'}, 'e');
    add(4, {'a', 'e', 'd'}, 'e');
    add(4, {'c', 'd', 'e'}, 'd');
    add(4, {'b', 'd', 'c'}, 'c');
    return set;
}

std::string derive_type_d_alias() {
    const ConfigurationSet u3 = build_u3_core();
    std::map<int, std::set<std::string>> wanted;  // 5-gon type -> class labels
    std::map<int, std::set<char>> wanted_letters;
    for (const Configuration& c : u3.members) {
        wanted[c.five_gon_label[0] - '0'].insert(c.five_gon_label);
        wanted_letters[c.five_gon_label[0] - '0'].insert(c.shared_side);
    }

    std::vector<std::string> candidates;
    std::ostringstream diag;
    for (auto& [label, profile] : sharing_profiles()) {
        std::set<int> types;
        for (const auto& [type, letters] : profile.letters) types.insert(type);
        diag << "  " << label << ": types";
        for (int t : types) diag << " " << t;
        diag << "\n";
        if (types != std::set<int>{2, 4}) continue;
        if (profile.letters.at(2) != wanted_letters.at(2)) continue;
        if (profile.letters.at(4) != wanted_letters.at(4)) continue;
        if (profile.classes.at(2) != wanted.at(2)) continue;
        if (profile.classes.at(4) != wanted.at(4)) continue;
        candidates.push_back(label);
    }
    if (candidates.size() != 1) {
        std::ostringstream msg;
        msg << "type D derivation found " << candidates.size() << " candidates";
        for (const std::string& c : candidates) msg << " " << c;
        msg << "\n" << diag.str();
        throw Error(msg.str());
    }
    return candidates.front();
}

AliasTable build_alias_table() {
    AliasTable table;
    const std::string d_label = derive_type_d_alias();
    const char* letters3[] = {"A", "B", "C"};
    int next3 = 0;
    for (const GonClass& cls : enumerate_gon_classes(3)) {
        if (cls.label == d_label)
            table.entries.push_back({3, cls.label, "D", true});
        else
            table.entries.push_back({3, cls.label, letters3[next3++], false});
    }
    check(next3 == 3, "expected exactly three positional 3-gon aliases");
    int next4 = 0;
    for (const GonClass& cls : enumerate_gon_classes(4))
        table.entries.push_back({4, cls.label, std::string("4") + char('a' + next4++), false});
    check(next4 == 13, "expected thirteen 4-gon aliases");
    return table;
}

std::vector<ConfigurationMatch> match_configuration(const CurveMap& curve,
                                                    const Configuration& config,
                                                    const AliasTable& aliases) {
    const AliasEntry* three = aliases.find_letter(3, config.three_gon_alias);
    if (!three) throw Error("unknown 3-gon alias: " + config.three_gon_alias);

    std::vector<ConfigurationMatch> out;
    const std::vector<FacePolygon>& fs = curve.faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (!fs[i].polygonal || fs[i].size() != 3) continue;
        if (classify_gon(curve, fs[i]).label != three->label) continue;
        for (int j = 0; j < static_cast<int>(fs.size()); ++j) {
            if (j == i || !fs[j].polygonal || fs[j].size() != 5) continue;
            if (classify_gon(curve, fs[j]).label != config.five_gon_label) continue;
            const RawGon raw = raw_of(fs[j]);
            for (int p5 = 0; p5 < 5; ++p5) {
                bool shared = false;
                for (int p3 = 0; p3 < 3; ++p3)
                    if (fs[i].sides[p3] == fs[j].sides[p5]) shared = true;
                if (!shared) continue;
                const std::vector<char> letters = realized_letters(raw, p5);
                if (std::find(letters.begin(), letters.end(), config.shared_side) !=
                    letters.end())
                    out.push_back({i, j, fs[j].sides[p5]});
            }
        }
    }
    return out;
}

void save_configuration_set(const ConfigurationSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write configuration set: " + path);
    out << "# configuration set v1\n";
    out << "# name=" << set.name << "\n";
    for (const Configuration& c : set.members)
        out << c.three_gon_alias << " share=" << c.shared_side << " 5gon=" << c.five_gon_label
            << "\n";
    out.flush();
    if (!out) throw Error("cannot write configuration set: " + path);
}

ConfigurationSet load_configuration_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open configuration set: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "# configuration set v1")
        throw ParseError("configuration file must start with '# configuration set v1'");
    if (!std::getline(in, line) || line.rfind("# name=", 0) != 0)
        throw ParseError("configuration file must declare its name");
    ConfigurationSet set;
    set.name = line.substr(7);

    std::set<std::string> known;
    for (const GonClass& cls : enumerate_gon_classes(5)) known.insert(cls.label);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string alias, share, five;
        fields >> alias >> share >> five;
        std::string extra;
        if (fields >> extra || alias.empty() || share.rfind("share=", 0) != 0 ||
            five.rfind("5gon=", 0) != 0)
            throw ParseError("bad configuration line: " + line);
        if (share.size() != 7 || share[6] < 'a' || share[6] > 'e')
            throw ParseError("bad shared side in: " + line);
        const std::string label = five.substr(5);
        if (!known.count(label)) throw ParseError("unknown 5-gon class in: " + line);
        set.members.push_back({alias, share[6], label, "file"});
    }
    return set;
}

}  // namespace scurve
