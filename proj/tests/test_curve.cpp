#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "scurve/chord.hpp"
#include "scurve/common.hpp"
#include "scurve/curve.hpp"
#include "test_util.hpp"

using namespace scurve;

namespace {

const char* kTrefoil = "a- b+ c- a- b+ c-";
const char* kTorus25 = "a- b+ c- d+ e- a- b+ c- d+ e-";

std::vector<int> face_sizes(const CurveMap& c) {
    std::vector<int> sizes;
    for (const FacePolygon& f : c.faces()) sizes.push_back(f.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("tokenize and render") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("  \n\t ").empty());
    const SignedGaussCode toks = tokenize(" a+  b-\tAb_1+ ");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0] == Token{"a", false});
    CHECK(toks[1] == Token{"b", true});
    CHECK(toks[2] == Token{"Ab_1", false});
    CHECK(render_tokens(toks) == "a+ b- Ab_1+");
    CHECK_THROWS_AS(tokenize("a"), ParseError);
    CHECK_THROWS_AS(tokenize("+"), ParseError);
    CHECK_THROWS_AS(tokenize("a* b+"), ParseError);
    CHECK_THROWS_AS(tokenize("a.b+"), ParseError);
}

TEST_CASE("parse validation") {
    CHECK_THROWS_AS(parse_signed_code("a+"), ParseError);
    CHECK_THROWS_AS(parse_signed_code("a+ a+ a+"), ParseError);
    CHECK_THROWS_AS(parse_signed_code("a+ b+ a+"), ParseError);
    CHECK_THROWS_AS(parse_signed_code("a+ a-"), ParseError);
    CHECK_THROWS_WITH_AS(parse_signed_code("a+ b+ a+ b+"), "non-spherical code", Error);
}

TEST_CASE("trivial curve") {
    const CurveMap c = parse_signed_code("");
    CHECK(c.trivial());
    CHECK(c.crossings() == 0);
    CHECK(faces(c).size() == 2);
    CHECK(genus(c) == 0);
    CHECK(emit_signed_code(c).empty());
    CHECK(canonical_code(c).empty());
}

TEST_CASE("one-crossing curve") {
    const CurveMap c = parse_signed_code("a+ a+");
    CHECK(c.crossings() == 1);
    CHECK(genus(c) == 0);
    CHECK(face_sizes(c) == std::vector<int>{1, 1, 2});
    CHECK(emit_signed_code(c) == "a+ a+");
    CHECK(canonical_code(c) == "1+ 1+");
    CHECK(is_equivalent(c, parse_signed_code("a- a-")));
    CHECK_FALSE(is_equivalent(c, parse_signed_code("")));
}

TEST_CASE("trefoil projection") {
    const CurveMap c = parse_signed_code(kTrefoil);
    CHECK(c.crossings() == 3);
    CHECK(genus(c) == 0);
    CHECK(face_sizes(c) == std::vector<int>{2, 2, 2, 3, 3});
    for (const FacePolygon& f : c.faces()) CHECK(f.polygonal);
    CHECK(canonical_code(c) == "1+ 2- 3+ 1+ 2- 3+");
    // same curve read from a start one pass later, and its mirror
    CHECK(is_equivalent(c, parse_signed_code("a+ b- c+ a+ b- c+")));
    CHECK(is_equivalent(c, parse_signed_code("b+ c- a+ b+ c- a+")));
    // sign is a visit-order datum: the uniform signing is not spherical
    CHECK_THROWS_WITH_AS(parse_signed_code("a+ b+ c+ a+ b+ c+"), "non-spherical code", Error);
}

TEST_CASE("(2,5) torus projection") {
    const CurveMap c = parse_signed_code(kTorus25);
    CHECK(c.crossings() == 5);
    CHECK(genus(c) == 0);
    CHECK(face_sizes(c) == std::vector<int>{2, 2, 2, 2, 2, 5, 5});
    CHECK(canonical_code(c) == "1+ 2- 3+ 4- 5+ 1+ 2- 3+ 4- 5+");
    CHECK_THROWS_WITH_AS(parse_signed_code("a+ b+ c+ d+ e+ a+ b+ c+ d+ e+"),
                         "non-spherical code", Error);
}

TEST_CASE("exhaustive length-4 codes") {
    // realizable two-crossing codes: both kink words with every signing;
    // the alternating word has no spherical signing
    std::map<std::string, int> accepted;
    std::set<std::string> classes;
    std::map<std::string, std::vector<int>> profiles;
    for (const auto& word : testutil::all_words(2)) {
        std::string key;
        for (int w : word) key += static_cast<char>('a' + w);
        accepted[key] = 0;
        for (int mask = 0; mask < 4; ++mask) {
            const std::vector<bool> neg{(mask & 1) != 0, (mask & 2) != 0};
            CurveMap c;
            if (!CurveMap::try_from_word(word, neg, c)) continue;
            ++accepted[key];
            classes.insert(c.canonical());
            profiles[key] = face_sizes(c);
        }
    }
    CHECK(accepted == std::map<std::string, int>{{"aabb", 4}, {"abab", 0}, {"abba", 4}});
    CHECK(classes.size() == 2);
    CHECK(profiles["aabb"] == std::vector<int>{1, 1, 2, 4});
    CHECK(profiles["abba"] == std::vector<int>{1, 1, 3, 3});
}

TEST_CASE("face tracer agreement up to n=4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& word : testutil::all_words(n)) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<bool> neg(n);
                for (int c = 0; c < n; ++c) neg[c] = (mask >> c) & 1;
                const testutil::TracedMap t = testutil::trace_faces(word, neg);
                CurveMap c;
                const bool ok = CurveMap::try_from_word(word, neg, c);
                REQUIRE(ok == (testutil::traced_genus(t) == 0));
                if (!ok) continue;
                REQUIRE(static_cast<int>(c.faces().size()) == n + 2);
                REQUIRE(c.faces().size() == t.face_stubs.size());
                std::vector<int> oracle_sizes;
                for (const auto& orbit : t.face_stubs)
                    oracle_sizes.push_back(static_cast<int>(orbit.size()));
                std::sort(oracle_sizes.begin(), oracle_sizes.end());
                REQUIRE(face_sizes(c) == oracle_sizes);
                int side_sum = 0;
                for (const FacePolygon& f : c.faces()) {
                    side_sum += f.size();
                    REQUIRE(f.sides.size() == f.corners.size());
                    REQUIRE(f.directions.size() == f.sides.size());
                }
                REQUIRE(side_sum == 4 * n);
                const CurveMap p = parse_signed_code(testutil::code_text(word, neg));
                REQUIRE(p.canonical() == c.canonical());
            }
        }
    }
}

TEST_CASE("canonical form properties up to n=4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& word : testutil::all_words(n)) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<bool> neg(n);
                for (int c = 0; c < n; ++c) neg[c] = (mask >> c) & 1;
                CurveMap c;
                if (!CurveMap::try_from_word(word, neg, c)) continue;
                const std::string canon = c.canonical();

                // idempotent
                REQUIRE(parse_signed_code(canon).canonical() == canon);

                // mirror: flip every sign
                std::vector<bool> flipped(neg);
                flipped.flip();
                CurveMap m;
                REQUIRE(CurveMap::try_from_word(word, flipped, m));
                REQUIRE(m.canonical() == canon);

                // reversal: reversed token list reads as the mirror curve
                SignedGaussCode toks = tokenize(testutil::code_text(word, neg));
                std::reverse(toks.begin(), toks.end());
                REQUIRE(CurveMap::from_tokens(toks).canonical() == canon);

                // every start point, with signs corrected for swapped visits
                for (int k = 1; k < 2 * n; ++k) {
                    std::vector<int> rw(word);
                    std::vector<bool> rn(neg);
                    testutil::rotate_code(rw, rn, k);
                    CurveMap r;
                    REQUIRE(CurveMap::try_from_word(rw, rn, r));
                    REQUIRE(r.canonical() == canon);
                }
            }
        }
    }
}

TEST_CASE("chord diagram and interleavement") {
    const CurveMap tre = parse_signed_code(kTrefoil);
    const ChordDiagram d = chord_diagram(tre);
    REQUIRE(d.chords.size() == 3);
    CHECK(d.chords[0] == std::array<int, 2>{0, 3});
    CHECK(d.chords[1] == std::array<int, 2>{1, 4});
    CHECK(d.chords[2] == std::array<int, 2>{2, 5});
    int pairs = 0;
    for (const char* x : {"a", "b", "c"})
        for (const char* y : {"a", "b", "c"})
            if (std::string(x) < y && interleaves(d, x, y)) ++pairs;
    CHECK(pairs == 3);
    CHECK(interleaves(d, "b", "a") == interleaves(d, "a", "b"));

    const ChordDiagram nested = chord_diagram(parse_signed_code("a+ b+ b+ a+"));
    CHECK_FALSE(interleaves(nested, "a", "b"));
    CHECK_THROWS_AS(interleaves(nested, "a", "z"), Error);

    // position labels match the emitted word
    const CurveMap k = parse_signed_code("a+ a+ b+ b+");
    const ChordDiagram dk = chord_diagram(k);
    CHECK(dk.position_label == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("emit round-trip preserves the curve") {
    for (const char* code : {"a+ a+", "a+ b+ b+ a+", kTrefoil, kTorus25}) {
        const CurveMap c = parse_signed_code(code);
        CHECK(emit_signed_code(c) == code);
        CHECK(is_equivalent(parse_signed_code(emit_signed_code(c)), c));
    }
}
