#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scurve/census.hpp"
#include "scurve/common.hpp"
#include "scurve/configs.hpp"
#include "scurve/curve.hpp"
#include "scurve/export.hpp"
#include "scurve/gons.hpp"
#include "scurve/reference_tables.hpp"
#include "scurve/splice.hpp"
#include "scurve/verify.hpp"

namespace {

using namespace scurve;

// Defaults shared across subcommands; settable from scurve.conf.
struct CliConfig {
    std::string aliases_path;  // empty: built-in table
    std::string census_path;
    int jobs = 1;
    int cap = 4;
    std::string format = "text";
};

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t k = 0;
    while (k < s.size() && s[k] == ' ') ++k;
    return s.substr(k);
}

// Inline argument, "-" for stdin, or a file given with --file.
std::string read_code(const std::string& inline_code, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open code file: " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return trimmed(buf.str());
    }
    if (inline_code == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return trimmed(buf.str());
    }
    return trimmed(inline_code);
}

AliasTable effective_aliases(const CliConfig& cfg) {
    return cfg.aliases_path.empty() ? build_alias_table() : load_alias_table(cfg.aliases_path);
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw Error("cannot write file: " + out_path);
}

int cmd_parse(const std::string& code) {
    const CurveMap curve = parse_signed_code(code);
    if (curve.trivial()) {
        std::cout << "trivial curve\n";
        return 0;
    }
    std::cout << "n=" << curve.crossings() << " F=" << curve.faces().size()
              << " genus=" << genus(curve) << ' ' << (is_reduced(curve) ? "reduced" : "reducible")
              << " canonical=" << curve.canonical() << "\n";
    return 0;
}

int cmd_faces(const std::string& code, const AliasTable& aliases) {
    const CurveMap curve = parse_signed_code(code);
    if (curve.trivial()) {
        std::cout << "trivial curve\n";
        return 0;
    }
    const auto fs = curve.faces();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::string label = "-", letter = "-";
        if (fs[i].polygonal && fs[i].size() >= 2 && fs[i].size() <= 5) {
            const GonClass cls = classify_gon(curve, fs[i]);
            label = cls.label;
            const std::string a = alias(aliases, cls);
            if (!a.empty()) letter = a;
        }
        std::cout << "face " << i << " size=" << fs[i].size()
                  << " polygonal=" << (fs[i].polygonal ? "yes" : "no") << " label=" << label
                  << " alias=" << letter << "\n";
    }
    return 0;
}

int cmd_reductivity(const std::string& code, int cap, bool trace) {
    const CurveMap curve = parse_signed_code(code);
    if (curve.trivial()) {
        std::cout << "trivial curve\n";
        return 0;
    }
    const ReductivityResult r = reductivity(curve, cap);
    if (r.exceeds_cap) {
        std::cout << "exceeds-cap(" << cap << ")\n";
        return 0;
    }
    std::cout << "reductivity=" << r.value << "\n";
    if (!r.witness.empty()) {
        std::cout << "witness:";
        for (const std::string& name : r.witness) std::cout << ' ' << name;
        std::cout << "\n";
    }
    if (trace) {
        CurveMap cur = parse_signed_code(curve.canonical());
        std::cout << "trace: " << cur.canonical() << "\n";
        for (const std::string& name : r.witness) {
            cur = parse_signed_code(hs_inverse(cur, name).canonical());
            std::cout << "trace: splice " << name << " -> "
                      << (cur.trivial() ? "trivial curve" : cur.canonical()) << "\n";
        }
    }
    return 0;
}

int cmd_census(int max_n, bool reduced, const std::string& out, int jobs) {
    const CensusStore store = enumerate_curves(max_n, reduced, jobs);
    if (out.empty()) {
        save_census(store, std::cout);
    } else {
        save_census(store, out);
        std::size_t total = 0;
        for (std::size_t c : census_counts(store)) total += c;
        std::cout << "wrote " << out << " (" << total << " curves)\n";
    }
    return 0;
}

int conformance_report() {
    auto aligns = type_assignment(5);
    std::sort(aligns.begin(), aligns.end(),
              [](const TypeAlignment& a, const TypeAlignment& b) {
                  return a.type_number < b.type_number;
              });
    const auto& tables = reference::five_gon_class_tables();
    int pass = 0, fail = 0;
    for (const TypeAlignment& ta : aligns) {
        const auto computed = sequence_classes(ta.pattern);
        const auto& listed = tables[ta.type_number - 1];
        for (const auto& ref_class : listed) {
            std::vector<std::string> members = ref_class;
            for (std::string& m : members)
                if (m == reference::kMisprintMember) {
                    m = reference::kMisprintActual;
                    std::cout << "misprint: " << reference::kMisprintMember
                              << " listed where the orbit has " << reference::kMisprintActual
                              << "\n";
                }
            std::sort(members.begin(), members.end());
            const bool found = std::any_of(
                computed.begin(), computed.end(), [&](const std::vector<std::string>& cls) {
                    std::vector<std::string> sorted = cls;
                    std::sort(sorted.begin(), sorted.end());
                    return sorted == members;
                });
            if (found) {
                ++pass;
            } else {
                ++fail;
                std::cout << "mismatch: type " << ta.type_number << " class of "
                          << ref_class.front() << " is not a computed orbit\n";
            }
        }
        std::cout << "type " << ta.type_number << ": " << listed.size() << " classes\n";
    }
    std::cout << "RESULT pass=" << pass << " fail=" << fail << " vacuous=0\n";
    return fail == 0 ? 0 : 1;
}

int cmd_atlas(int n, bool chords, bool conformance, const std::string& write_aliases,
              const std::string& write_u3, const AliasTable& aliases) {
    if (conformance) {
        if (n != 5) throw Error("conformance tables cover n=5 only");
        return conformance_report();
    }
    if (!write_aliases.empty()) {
        save_alias_table(build_alias_table(), write_aliases);
        std::cout << "wrote " << write_aliases << "\n";
        return 0;
    }
    if (!write_u3.empty()) {
        save_configuration_set(build_u3_core(), write_u3);
        std::cout << "wrote " << write_u3 << "\n";
        return 0;
    }
    const auto classes = enumerate_gon_classes(n);
    std::vector<int> by_type;
    for (const GonClass& cls : classes) {
        if (cls.type_number > static_cast<int>(by_type.size())) by_type.resize(cls.type_number);
        ++by_type[cls.type_number - 1];
        const std::string letter = alias(aliases, cls);
        std::cout << cls.label << " type=" << cls.type_number << " seq=" << cls.canonical_sequence
                  << " alias=" << (letter.empty() ? "-" : letter) << "\n";
        if (chords) {
            std::istringstream lines(chord_text(gon_chord_presentation(cls), true));
            std::string line;
            while (std::getline(lines, line)) std::cout << "  " << line << "\n";
        }
    }
    std::cout << "classes=" << classes.size();
    for (std::size_t t = 0; t < by_type.size(); ++t)
        std::cout << (t == 0 ? " types " : "/") << by_type[t];
    std::cout << "\n";
    return 0;
}

int cmd_verify(const std::string& census_path, const std::string& checkid,
               const std::string& configs_path, const AliasTable& aliases) {
    if (census_path.empty()) throw Error("verify needs a census file (--census)");
    const CensusStore census = load_census(census_path);
    const ConfigurationSet configs =
        configs_path.empty() ? build_u3_core() : load_configuration_set(configs_path);
    if (checkid == "thm1") {
        const auto witnesses = theorem1_search(census, aliases);
        int minimal = -1;
        for (const Theorem1Witness& w : witnesses) {
            const CurveMap curve = CurveMap::parse(w.code);
            if (minimal < 0 || curve.crossings() < minimal) minimal = curve.crossings();
            std::cout << "witness " << w.code << " reductivity="
                      << (w.exceeds_cap ? "exceeds-cap" : std::to_string(w.reductivity_value))
                      << "\n";
        }
        if (minimal < 0)
            std::cout << "none up to " << census.max_n << "\n";
        else
            std::cout << "minimal crossing number: " << minimal << "\n";
        std::size_t total = 0;
        for (std::size_t c : census_counts(census)) total += c;
        std::cout << "RESULT pass=" << witnesses.size() << " fail=0 vacuous="
                  << total - witnesses.size() << "\n";
        return 0;
    }
    const CheckReport rep = verify_lemma(census, checkid, aliases, configs);
    for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
    std::cout << "check " << rep.id << ": "
              << (!rep.ok() ? "FAIL" : rep.vacuously_consistent() ? "vacuously consistent" : "pass")
              << "\n";
    std::cout << "RESULT pass=" << rep.pass << " fail=" << rep.fail
              << " vacuous=" << rep.vacuous << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_export(const std::string& code, const std::string& format, const std::string& out) {
    const CurveMap curve = parse_signed_code(code);
    const ChordDiagram diagram = chord_diagram(curve);
    write_out(format == "svg" ? chord_svg(diagram) : chord_text(diagram), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical curve toolkit: codes, gon classes, reductivity, census checks"};
    app.require_subcommand(1);
    app.set_config("--config", "scurve.conf", "config file with key = value lines");

    CliConfig cfg;
    app.add_option("--aliases", cfg.aliases_path, "gon class alias file (default: built-in)")
        ->check(CLI::ExistingFile);
    app.add_option("--census", cfg.census_path, "census file for verify")
        ->check(CLI::ExistingFile);
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "reductivity search cap")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "export format")
        ->check(CLI::IsMember({"text", "svg"}));

    std::string code, code_file;
    auto add_code = [&](CLI::App* sub) {
        sub->add_option("code", code, "signed Gauss code, or - for stdin");
        sub->add_option("--file", code_file, "read the code from a file")
            ->check(CLI::ExistingFile);
    };

    int status = 0;

    CLI::App* parse = app.add_subcommand("parse", "print size, faces and canonical form");
    add_code(parse);
    parse->callback([&] { status = cmd_parse(read_code(code, code_file)); });

    for (const char* name : {"faces", "classify"}) {
        CLI::App* sub = app.add_subcommand(name, "table of faces with gon classes");
        add_code(sub);
        sub->callback(
            [&] { status = cmd_faces(read_code(code, code_file), effective_aliases(cfg)); });
    }

    CLI::App* red = app.add_subcommand("reductivity", "splice distance to a reducible curve");
    add_code(red);
    int red_cap = -1;
    bool red_trace = false;
    red->add_option("--cap", red_cap, "search cap (default: global --cap)");
    red->add_flag("--trace", red_trace, "print the witness descent");
    red->callback([&] {
        status = cmd_reductivity(read_code(code, code_file), red_cap < 0 ? cfg.cap : red_cap,
                                 red_trace);
    });

    CLI::App* census = app.add_subcommand("census", "enumerate curves up to a crossing number");
    int census_max_n = 0, census_jobs = -1;
    bool census_reduced = false;
    std::string census_out;
    census->add_option("--max-n", census_max_n, "largest crossing number")
        ->required()
        ->check(CLI::Range(0, 14));
    census->add_flag("--reduced", census_reduced, "keep reduced curves only");
    census->add_option("--out", census_out, "output file (default: stdout)");
    census->add_option("--jobs", census_jobs, "worker threads (default: global --jobs)");
    census->callback([&] {
        status = cmd_census(census_max_n, census_reduced, census_out,
                            census_jobs < 0 ? cfg.jobs : census_jobs);
    });

    CLI::App* atlas = app.add_subcommand("atlas", "typed gon class tables");
    int atlas_n = 5;
    bool atlas_chords = false, atlas_conformance = false;
    std::string atlas_aliases, atlas_u3;
    atlas->add_option("--n", atlas_n, "gon size")->check(CLI::Range(2, 5));
    atlas->add_flag("--chords", atlas_chords, "append chord fragment presentations");
    atlas->add_flag("--conformance", atlas_conformance,
                    "compare the n=5 orbits against the reference tables");
    atlas->add_option("--write-aliases", atlas_aliases, "write the alias table to a file");
    atlas->add_option("--write-u3", atlas_u3, "write the core configuration set to a file");
    atlas->callback([&] {
        status = cmd_atlas(atlas_n, atlas_chords, atlas_conformance, atlas_aliases, atlas_u3,
                           effective_aliases(cfg));
    });

    CLI::App* verify = app.add_subcommand("verify", "check a lemma over a census");
    std::string verify_census, verify_check, verify_configs;
    verify->add_option("--census", verify_census, "census file (default: global --census)")
        ->check(CLI::ExistingFile);
    verify
        ->add_option("--check", verify_check,
                     "ast, abc-implication, 4a-implication, bound, u3-local or thm1")
        ->required();
    verify->add_option("--configs", verify_configs, "configuration set file (default: built-in)")
        ->check(CLI::ExistingFile);
    verify->callback([&] {
        status = cmd_verify(verify_census.empty() ? cfg.census_path : verify_census, verify_check,
                            verify_configs, effective_aliases(cfg));
    });

    CLI::App* exp = app.add_subcommand("export", "chord diagram of a curve");
    bool exp_chord = false;
    std::string exp_format, exp_out;
    add_code(exp);
    exp->add_flag("--chord", exp_chord, "chord diagram output");
    exp->add_option("--format", exp_format, "text or svg (default: global --format)")
        ->check(CLI::IsMember({"text", "svg"}));
    exp->add_option("--out", exp_out, "output file (default: stdout)");
    exp->callback([&] {
        if (!exp_chord) throw Error("export needs --chord");
        status = cmd_export(read_code(code, code_file),
                            exp_format.empty() ? cfg.format : exp_format, exp_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
