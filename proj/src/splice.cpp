#include "scurve/splice.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>
#include <utility>

#include "scurve/common.hpp"

namespace scurve {

namespace {

std::vector<bool> nugatory_by_chords(const CurveMap& curve) {
    const int n = curve.crossings();
    std::vector<bool> out(n, true);
    for (int c1 = 0; c1 < n; ++c1) {
        const auto [a, b] = curve.occurrences(c1);
        for (int c2 = 0; c2 < n && out[c1]; ++c2) {
            if (c2 == c1) continue;
            const auto [p, q] = curve.occurrences(c2);
            if ((a < p && p < b) != (a < q && q < b)) out[c1] = false;
        }
    }
    return out;
}

std::vector<bool> nugatory_by_faces(const CurveMap& curve) {
    const int n = curve.crossings();
    std::vector<bool> out(n, false);
    std::vector<int> count(n);
    for (const FacePolygon& f : curve.faces()) {
        std::fill(count.begin(), count.end(), 0);
        for (int c : f.corners)
            if (++count[c] >= 2) out[c] = true;
    }
    return out;
}

int bfs_value(const CurveMap& start, int cap) {
    if (is_reducible(start)) return 0;
    std::unordered_set<std::string> visited{start.canonical()};
    std::vector<std::string> frontier{start.canonical()};
    for (int depth = 1; depth <= cap; ++depth) {
        std::vector<std::string> next_frontier;
        for (const std::string& code : frontier) {
            const CurveMap cur = parse_signed_code(code);
            for (int c = 0; c < cur.crossings(); ++c) {
                const CurveMap child = hs_inverse(cur, cur.name(c));
                if (child.trivial()) continue;  // dead end: nothing left to reduce
                if (is_reducible(child)) return depth;
                if (visited.insert(child.canonical()).second)
                    next_frontier.push_back(child.canonical());
            }
        }
        frontier = std::move(next_frontier);
        if (frontier.empty()) break;
    }
    return -1;
}

}  // namespace

std::vector<std::string> nugatory_crossings(const CurveMap& curve) {
    const std::vector<bool> by_chords = nugatory_by_chords(curve);
    const std::vector<bool> by_faces = nugatory_by_faces(curve);
    check(by_chords == by_faces, "nugatory tests disagree");
    std::vector<std::string> names;
    for (int c = 0; c < curve.crossings(); ++c)
        if (by_chords[c]) names.push_back(curve.name(c));
    std::sort(names.begin(), names.end());
    return names;
}

bool is_reducible(const CurveMap& curve) { return !nugatory_crossings(curve).empty(); }

bool is_reduced(const CurveMap& curve) { return !is_reducible(curve); }

CurveMap hs_inverse(const CurveMap& curve, const std::string& crossing) {
    const int c = curve.id_of(crossing);
    if (c < 0) throw Error("unknown crossing '" + crossing + "'");
    const int n = curve.crossings(), L = 2 * n, D = 4 * n;
    const int p1 = curve.occurrences(c)[0];
    const int w = 2 * ((p1 + L - 1) % L) + 1;
    const int x = curve.sigma(w), y = curve.sigma(x), z = curve.sigma(y);

    // the two rotation-adjacent reconnections of the four strand ends at c
    auto rejoin = [&](int pairing, int d) {
        if (pairing == 0) return d == w ? x : d == x ? w : d == y ? z : y;
        return d == x ? y : d == y ? x : d == z ? w : z;
    };
    // follow the strand: cross the current edge, then pass the crossing
    auto next = [&](int pairing, int d) {
        const int e = d ^ 1;
        return curve.dart_base(e) == c ? rejoin(pairing, e)
                                       : curve.sigma(curve.sigma(e));
    };

    int chosen = -1;
    for (int pairing = 0; pairing < 2; ++pairing) {
        std::vector<char> seen(D, 0);
        int orbits = 0;
        for (int d0 = 0; d0 < D; ++d0) {
            if (seen[d0]) continue;
            for (int d = d0; !seen[d]; d = next(pairing, d)) seen[d] = 1;
            ++orbits;
        }
        if (orbits == 2) {  // one strand, traversed each way
            check(chosen < 0, "both reconnections keep one component");
            chosen = pairing;
        }
    }
    check(chosen >= 0, "no reconnection keeps one component");

    std::vector<int> word;
    word.reserve(L - 2);
    std::vector<std::array<int, 2>> vis_in(n, {-1, -1}), vis_out(n, {-1, -1});
    int d = 0;
    for (int k = 0; k < L; ++k) {
        const int e = d ^ 1;
        const int b = curve.dart_base(e);
        if (b != c) {
            const int out = curve.sigma(curve.sigma(e));
            const int visit = vis_in[b][0] < 0 ? 0 : 1;
            vis_in[b][visit] = e;
            vis_out[b][visit] = out;
            word.push_back(b > c ? b - 1 : b);
        }
        d = next(chosen, d);
    }
    check(d == 0, "splice walk does not close");

    std::vector<bool> neg(n - 1);
    std::vector<std::string> names;
    names.reserve(n - 1);
    for (int b = 0; b < n; ++b) {
        if (b == c) continue;
        names.push_back(curve.name(b));
        const int turn = curve.sigma(vis_in[b][0]);
        bool s = false;
        if (turn == vis_in[b][1])
            s = false;
        else if (turn == vis_out[b][1])
            s = true;
        else
            internal_error("sign reconstruction failed");
        neg[b > c ? b - 1 : b] = s;
    }
    return CurveMap::from_word(word, neg, std::move(names));
}

ReductivityResult reductivity(const CurveMap& curve, int cap) {
    if (curve.trivial()) throw Error("trivial curve has no reductivity");
    ReductivityResult res;
    res.cap = cap;
    res.value = bfs_value(curve, cap);
    if (res.value < 0) {
        res.exceeds_cap = true;
        return res;
    }
    // witness: lexicographically least label sequence over shortest descents,
    // each label naming a crossing of the canonical form at that step
    CurveMap state = parse_signed_code(curve.canonical());
    for (int r = res.value; r > 0; --r) {
        std::vector<std::string> labels = state.names();
        std::sort(labels.begin(), labels.end());
        bool found = false;
        for (const std::string& label : labels) {
            const CurveMap child = hs_inverse(state, label);
            if (child.trivial()) continue;
            if (bfs_value(child, r - 1) == r - 1) {
                res.witness.push_back(label);
                state = parse_signed_code(child.canonical());
                found = true;
                break;
            }
        }
        check(found, "witness descent failed");
    }
    return res;
}

}  // namespace scurve
