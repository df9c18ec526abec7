#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "scurve/gauss_code.hpp"

namespace scurve {

// One face of the curve complement. Boundary data is cyclic; entry k
// describes the k-th side in boundary order.
struct FacePolygon {
    std::vector<int> darts;                // dart opening each side
    std::vector<int> sides;                // edge index of each side
    std::vector<int> corners;              // crossing at the corner starting each side
    std::vector<std::uint8_t> directions;  // 1 = curve runs along the boundary orientation
    bool polygonal = false;                // all sides distinct edges, all corners distinct

    int size() const { return static_cast<int>(darts.size()); }
};

// A spherical curve: a closed single-component 4-valent map of genus 0,
// built from a signed Gauss code.
//
// Conventions. The word w[0..2n-1] lists crossing ids along the traversal.
// Edge i runs from position i to position i+1 (mod 2n) and owns darts 2i
// (based at w[i]) and 2i+1 (based at w[i+1]); alpha(d) = d^1 swaps edge ends.
// At a crossing first visited at position p1 and again at p2, with
// in_k/out_k the arriving/leaving darts of visit k, sign '+' means the
// counterclockwise rotation is (in1, in2, out1, out2) and '-' means
// (in1, out2, out1, in2).
class CurveMap {
public:
    CurveMap() = default;  // trivial curve (no crossings)

    static CurveMap parse(const std::string& text);
    static CurveMap from_tokens(const SignedGaussCode& tokens);
    // word of crossing ids 0..n-1, one sign per id; names default to a, b, ...
    static CurveMap from_word(const std::vector<int>& word, const std::vector<bool>& neg,
                              std::vector<std::string> names = {});
    // census hot path: false instead of throwing when the map is not genus 0
    static bool try_from_word(const std::vector<int>& word, const std::vector<bool>& neg,
                              CurveMap& out);

    int crossings() const { return n_; }
    bool trivial() const { return n_ == 0; }
    int length() const { return static_cast<int>(word_.size()); }  // 2n
    int dart_count() const { return 4 * n_; }

    const std::vector<int>& word() const { return word_; }
    const std::string& name(int c) const { return names_[c]; }
    const std::vector<std::string>& names() const { return names_; }
    int id_of(const std::string& name) const;  // -1 when absent
    bool negative(int c) const { return neg_[c]; }
    const std::array<int, 2>& occurrences(int c) const { return pos_[c]; }

    static int alpha(int d) { return d ^ 1; }
    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int dart_base(int d) const;
    static int dart_edge(int d) { return d >> 1; }

    const std::vector<FacePolygon>& faces() const { return faces_; }
    int face_of(int d) const { return face_of_[d]; }

    std::string emit() const;  // code with original names
    const std::string& canonical() const { return canonical_; }

    bool operator==(const CurveMap& o) const { return canonical_ == o.canonical_; }

private:
    int n_ = 0;
    std::vector<int> word_;
    std::vector<std::string> names_;
    std::vector<bool> neg_;
    std::vector<std::array<int, 2>> pos_;
    std::vector<int> sigma_, sigma_inv_;
    std::vector<FacePolygon> faces_;
    std::vector<int> face_of_;
    std::string canonical_;

    void set_word(const std::vector<int>& word, const std::vector<bool>& neg,
                  std::vector<std::string> names);
    bool build(bool throw_on_genus);
    std::string compute_canonical() const;
};

CurveMap parse_signed_code(const std::string& text);
std::string emit_signed_code(const CurveMap& curve);
const std::vector<FacePolygon>& faces(const CurveMap& curve);
int genus(const CurveMap& curve);  // always 0 for a constructed curve
std::string canonical_code(const CurveMap& curve);
bool is_equivalent(const CurveMap& a, const CurveMap& b);

}  // namespace scurve
