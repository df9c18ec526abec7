#include "scurve/curve.hpp"

#include <algorithm>
#include <utility>

#include "scurve/chord.hpp"
#include "scurve/common.hpp"

namespace scurve {

namespace {

std::string default_name(int c) {
    if (c < 26) return std::string(1, static_cast<char>('a' + c));
    return "c" + std::to_string(c);
}

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

CurveMap CurveMap::parse(const std::string& text) { return from_tokens(tokenize(text)); }

CurveMap CurveMap::from_tokens(const SignedGaussCode& tokens) {
    std::vector<int> word;
    std::vector<std::string> names;
    std::vector<bool> neg;
    std::vector<int> seen;
    word.reserve(tokens.size());
    for (const Token& t : tokens) {
        int id = -1;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == t.name) {
                id = static_cast<int>(i);
                break;
            }
        if (id < 0) {
            id = static_cast<int>(names.size());
            names.push_back(t.name);
            neg.push_back(t.neg);
            seen.push_back(0);
        } else if (neg[id] != t.neg) {
            throw ParseError("inconsistent sign for crossing '" + t.name + "'");
        }
        if (++seen[id] > 2)
            throw ParseError("crossing '" + t.name + "' appears more than twice");
        word.push_back(id);
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        if (seen[i] != 2) throw ParseError("crossing '" + names[i] + "' appears only once");
    return from_word(word, neg, std::move(names));
}

CurveMap CurveMap::from_word(const std::vector<int>& word, const std::vector<bool>& neg,
                             std::vector<std::string> names) {
    CurveMap c;
    c.set_word(word, neg, std::move(names));
    c.build(true);
    return c;
}

bool CurveMap::try_from_word(const std::vector<int>& word, const std::vector<bool>& neg,
                             CurveMap& out) {
    out.set_word(word, neg, {});
    return out.build(false);
}

void CurveMap::set_word(const std::vector<int>& word, const std::vector<bool>& neg,
                        std::vector<std::string> names) {
    const int L = static_cast<int>(word.size());
    if (L % 2) throw ParseError("odd code length");
    n_ = L / 2;
    if (static_cast<int>(neg.size()) != n_) throw Error("sign vector size mismatch");
    word_ = word;
    neg_ = neg;
    pos_.assign(n_, {-1, -1});
    for (int p = 0; p < L; ++p) {
        const int c = word[p];
        if (c < 0 || c >= n_) throw Error("crossing id out of range");
        if (pos_[c][0] < 0)
            pos_[c][0] = p;
        else if (pos_[c][1] < 0)
            pos_[c][1] = p;
        else
            throw Error("crossing appears more than twice");
    }
    for (int c = 0; c < n_; ++c)
        if (pos_[c][1] < 0) throw Error("crossing appears only once");
    if (names.empty()) {
        names_.resize(n_);
        for (int c = 0; c < n_; ++c) names_[c] = default_name(c);
    } else {
        if (static_cast<int>(names.size()) != n_) throw Error("name list size mismatch");
        names_ = std::move(names);
    }
}

bool CurveMap::build(bool throw_on_genus) {
    const int L = 2 * n_, D = 4 * n_;
    if (n_ == 0) {
        sigma_.clear();
        sigma_inv_.clear();
        faces_.assign(2, FacePolygon{});  // a simple closed curve bounds two disks
        face_of_.clear();
        canonical_.clear();
        return true;
    }
    sigma_.assign(D, -1);
    sigma_inv_.assign(D, -1);
    for (int c = 0; c < n_; ++c) {
        const int p1 = pos_[c][0], p2 = pos_[c][1];
        const int in1 = 2 * ((p1 + L - 1) % L) + 1, out1 = 2 * p1;
        const int in2 = 2 * ((p2 + L - 1) % L) + 1, out2 = 2 * p2;
        if (!neg_[c]) {
            sigma_[in1] = in2;
            sigma_[in2] = out1;
            sigma_[out1] = out2;
            sigma_[out2] = in1;
        } else {
            sigma_[in1] = out2;
            sigma_[out2] = out1;
            sigma_[out1] = in2;
            sigma_[in2] = in1;
        }
    }
    for (int d = 0; d < D; ++d) sigma_inv_[sigma_[d]] = d;

    // faces are the orbits of d -> sigma(alpha(d))
    face_of_.assign(D, -1);
    int nfaces = 0;
    for (int d0 = 0; d0 < D; ++d0) {
        if (face_of_[d0] >= 0) continue;
        for (int d = d0; face_of_[d] < 0; d = sigma_[d ^ 1]) face_of_[d] = nfaces;
        ++nfaces;
    }
    if (nfaces != n_ + 2) {
        if (throw_on_genus) throw Error("non-spherical code");
        return false;
    }

    faces_.assign(nfaces, FacePolygon{});
    for (int d0 = 0; d0 < D; ++d0) {
        FacePolygon& f = faces_[face_of_[d0]];
        if (!f.darts.empty()) continue;
        int d = d0;
        do {
            f.darts.push_back(d);
            f.sides.push_back(d >> 1);
            f.corners.push_back(dart_base(d));
            f.directions.push_back((d & 1) ? 0 : 1);
            d = sigma_[d ^ 1];
        } while (d != d0);
        f.polygonal = all_distinct(f.sides) && all_distinct(f.corners);
    }

    canonical_ = compute_canonical();
    return true;
}

int CurveMap::id_of(const std::string& name) const {
    for (int c = 0; c < n_; ++c)
        if (names_[c] == name) return c;
    return -1;
}

int CurveMap::dart_base(int d) const {
    const int i = d >> 1;
    return (d & 1) ? word_[(i + 1) % word_.size()] : word_[i];
}

std::string CurveMap::emit() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ' ';
        out += names_[word_[i]];
        out += neg_[word_[i]] ? '-' : '+';
    }
    return out;
}

// Least code string over all 8n traversals: 2n start edges x 2 directions x
// mirror. Crossings relabel as 1,2,... in first-visit order; signs are
// recomputed from the (possibly reversed) rotations.
std::string CurveMap::compute_canonical() const {
    if (n_ == 0) return "";
    const int L = 2 * n_, D = 4 * n_;
    std::vector<int> walk(L), rank(n_), q1(n_), q2(n_), signbit(n_);
    std::string best, cur;
    for (int m = 0; m < 2; ++m) {
        const std::vector<int>& sg = m ? sigma_inv_ : sigma_;
        for (int d0 = 0; d0 < D; ++d0) {
            int d = d0;
            for (int k = 0; k < L; ++k) {
                walk[k] = d;
                d = sg[sg[d ^ 1]];
            }
            check(d == d0, "traversal does not close");
            std::fill(q1.begin(), q1.end(), -1);
            int next_rank = 0;
            for (int k = 0; k < L; ++k) {
                const int c = dart_base(walk[k]);
                if (q1[c] < 0) {
                    q1[c] = k;
                    rank[c] = next_rank++;
                } else {
                    q2[c] = k;
                }
            }
            for (int c = 0; c < n_; ++c) {
                const int a1 = walk[(q1[c] + L - 1) % L] ^ 1;
                const int a2 = walk[(q2[c] + L - 1) % L] ^ 1;
                const int x = sg[a1];
                if (x == a2)
                    signbit[c] = 0;
                else if (x == walk[q2[c]])
                    signbit[c] = 1;
                else
                    internal_error("sign reconstruction failed");
            }
            cur.clear();
            for (int k = 0; k < L; ++k) {
                const int c = dart_base(walk[k]);
                if (k) cur += ' ';
                cur += std::to_string(rank[c] + 1);
                cur += signbit[c] ? '-' : '+';
            }
            if (best.empty() || cur < best) best = std::move(cur);
        }
    }
    return best;
}

CurveMap parse_signed_code(const std::string& text) { return CurveMap::parse(text); }

std::string emit_signed_code(const CurveMap& curve) { return curve.emit(); }

const std::vector<FacePolygon>& faces(const CurveMap& curve) { return curve.faces(); }

int genus(const CurveMap& curve) {
    const int n = curve.crossings();
    const int f = static_cast<int>(curve.faces().size());
    return (2 + n - f) / 2;
}

std::string canonical_code(const CurveMap& curve) { return curve.canonical(); }

bool is_equivalent(const CurveMap& a, const CurveMap& b) {
    return a.canonical() == b.canonical();
}

ChordDiagram chord_diagram(const CurveMap& curve) {
    ChordDiagram d;
    d.position_label = curve.word();
    d.names = curve.names();
    d.chords.reserve(curve.crossings());
    for (int c = 0; c < curve.crossings(); ++c) d.chords.push_back(curve.occurrences(c));
    return d;
}

bool interleaves(const ChordDiagram& diagram, const std::string& c1, const std::string& c2) {
    auto find = [&](const std::string& name) {
        for (std::size_t i = 0; i < diagram.names.size(); ++i)
            if (diagram.names[i] == name) return static_cast<int>(i);
        throw Error("unknown crossing '" + name + "'");
    };
    const int i1 = find(c1), i2 = find(c2);
    if (i1 == i2) throw Error("crossings must differ");
    const auto [a, b] = diagram.chords[i1];
    auto inside = [&](int p) { return a < p && p < b; };
    return inside(diagram.chords[i2][0]) != inside(diagram.chords[i2][1]);
}

}  // namespace scurve
