#include "joint.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scurve/common.hpp"
#include "scurve/gons.hpp"

namespace scurve::joint {

namespace {

bool follows(const std::array<int, 7>& order, int x, int y) {
    for (int i = 0; i < 7; ++i)
        if (order[i] == x) return order[(i + 1) % 7] == y;
    internal_error("side missing from the order");
}

RawGon t_gon(const Datum& d) {
    return RawGon{3, {d.t_bits.begin(), d.t_bits.end()}, t_visit(d)};
}

}  // namespace

std::vector<Datum> enumerate() {
    std::vector<Datum> out;
    for (int m = 0; m < 32; ++m) {
        Datum d{};
        for (int p = 0; p < 5; ++p) d.g_bits[p] = (m >> p) & 1;
        // the shared side is traversed in opposite boundary directions, and
        // at each of its ends the two non-shared sides continue each other
        d.t_bits[0] = 1 ^ d.g_bits[0];
        d.t_bits[1] = d.g_bits[4];
        d.t_bits[2] = d.g_bits[1];
        std::array<int, 6> rest{1, 2, 3, 4, 5, 6};
        do {
            d.order[0] = 0;
            std::copy(rest.begin(), rest.end(), d.order.begin() + 1);
            bool end1 = d.t_bits[2] ? follows(d.order, 6, 1) : follows(d.order, 1, 6);
            bool end0 = d.t_bits[1] ? follows(d.order, 4, 5) : follows(d.order, 5, 4);
            if (end1 && end0) out.push_back(d);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

std::vector<int> g_visit(const Datum& d) {
    std::vector<int> out;
    for (int id : d.order)
        if (id <= 4) out.push_back(id);
    return out;
}

std::vector<int> t_visit(const Datum& d) {
    std::vector<int> out;
    for (int id : d.order) {
        if (id == 0) out.push_back(0);
        if (id == 5) out.push_back(1);
        if (id == 6) out.push_back(2);
    }
    return out;
}

const Binding& binding() {
    static const Binding bound = [] {
        // per 3-gon class: the 5-gon shapes it pairs with, and for each shape
        // the offsets of the shared side from the shape's reflection axis
        std::map<std::string, std::map<std::string, std::set<int>>> table;
        const std::string all_ones(5, '1');
        for (const Datum& d : enumerate()) {
            GonClass t = classify_raw(t_gon(d));
            DirectionPattern pat{5, {d.g_bits.begin(), d.g_bits.end()}};
            std::set<int>& offsets = table[t.label][pattern_orbit_code(pat)];
            if (pattern_orbit_code(pat) == all_ones) {
                offsets.insert(-1);
                continue;
            }
            for (const SymmetryElement& e : pattern_group(pat))
                if (e.reflection)
                    for (int p = 0; p < 5; ++p)
                        if (symmetry_image(e, p, 5) == p) offsets.insert(std::min(p, 5 - p));
        }

        Binding b;
        for (const auto& [label, shapes] : table) {
            if (shapes.size() != 2 || shapes.count(all_ones)) continue;
            std::string axis, wide;
            for (const auto& [shape, offs] : shapes) {
                if (offs == std::set<int>{0}) axis = shape;
                if (offs == std::set<int>{0, 1}) wide = shape;
            }
            if (axis.empty() || wide.empty()) continue;
            check(b.d_candidates.empty() || (b.axis_shape == axis && b.wide_shape == wide),
                  "distinguished 3-gon classes disagree on the shape roles");
            b.d_candidates.push_back(label);
            b.axis_shape = axis;
            b.wide_shape = wide;
        }
        check(!b.d_candidates.empty(), "no 3-gon class pairs as distinguished");

        std::set<std::string> reflective;
        for (const auto& [label, shapes] : table)
            for (const auto& [shape, offs] : shapes)
                if (shape != all_ones) reflective.insert(shape);
        reflective.erase(b.axis_shape);
        reflective.erase(b.wide_shape);
        check(reflective.size() == 1, "unexpected 5-gon shape inventory");
        b.other_shape = *reflective.begin();
        return b;
    }();
    return bound;
}

}  // namespace scurve::joint
