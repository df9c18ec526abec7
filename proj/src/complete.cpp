#include "complete.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>

#include "scurve/common.hpp"

namespace scurve::complete {
namespace {

// One pass of a strand through a crossing. Slots number the four ends in
// counterclockwise order; a strand always leaves through the slot opposite
// the one it entered. `side` marks the fragment side realized by the edge
// leaving this visit.
struct Visit {
    int crossing = 0;
    int in_slot = 0;
    int out_slot = 0;
    int side = -1;
};

// A maximal strand through the fragment, from one boundary stub to another.
struct Unit {
    int entry_stub = 0;
    int exit_stub = 0;
    std::vector<Visit> steps;
};

// Closes a fragment whose loose ends sit on a circle at the given stub
// positions (numbered counterclockwise). Consecutive units are joined by a
// gap strand routed outside the circle: radially out from the exit stub to a
// radius private to the gap, counterclockwise along that radius, and back in
// to the next entry stub. Crossings between gap strands are read off from
// the polar picture, so the result is planar by construction.
struct Builder {
    int crossings = 0;
    int stub_count = 0;
    int side_count = 0;
    std::vector<Unit> units;  // in curve order

    int new_crossing() { return crossings++; }

    Completion run() {
        const int m = static_cast<int>(units.size());
        std::vector<int> used(stub_count, 0);
        for (const Unit& u : units) {
            ++used[u.entry_stub];
            ++used[u.exit_stub];
        }
        for (int s = 0; s < stub_count; ++s)
            check(used[s] == 1, "every stub must be used exactly once");

        std::vector<int> a(m), b(m);  // gap j: arc from angle a[j] to b[j]
        for (int j = 0; j < m; ++j) {
            a[j] = units[j].exit_stub;
            b[j] = units[(j + 1) % m].entry_stub;
        }
        auto ccw_between = [&](int from, int to, int x) {
            int span = (to - from + stub_count) % stub_count;
            int off = (x - from + stub_count) % stub_count;
            return off > 0 && off < span;
        };

        // Gap radii grow with the gap index, so the arc of gap i meets a
        // radial of gap j exactly when i < j and the radial's angle lies
        // strictly inside the arc. Key: (arc gap, radial gap, radial end).
        std::map<std::array<int, 3>, int> bus;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (ccw_between(a[i], b[i], a[j])) bus[{i, j, 0}] = new_crossing();
                if (ccw_between(a[i], b[i], b[j])) bus[{i, j, 1}] = new_crossing();
            }

        // Polar slot order at a bus crossing: outward, counterclockwise,
        // inward, clockwise.
        std::vector<Visit> walk;
        for (int j = 0; j < m; ++j) {
            for (const Visit& v : units[j].steps) walk.push_back(v);
            for (int i = 0; i < j; ++i)  // outbound: inner arcs first
                if (auto it = bus.find({i, j, 0}); it != bus.end())
                    walk.push_back({it->second, 2, 0, -1});
            std::vector<std::pair<int, Visit>> on_arc;
            for (int k = j + 1; k < m; ++k) {
                if (auto it = bus.find({j, k, 0}); it != bus.end())
                    on_arc.emplace_back((a[k] - a[j] + stub_count) % stub_count,
                                        Visit{it->second, 3, 1, -1});
                if (auto it = bus.find({j, k, 1}); it != bus.end())
                    on_arc.emplace_back((b[k] - a[j] + stub_count) % stub_count,
                                        Visit{it->second, 3, 1, -1});
            }
            std::sort(on_arc.begin(), on_arc.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& [off, v] : on_arc) walk.push_back(v);
            for (int i = j - 1; i >= 0; --i)  // inbound: outer arcs first
                if (auto it = bus.find({i, j, 1}); it != bus.end())
                    walk.push_back({it->second, 0, 2, -1});
        }

        std::vector<int> word(walk.size());
        std::vector<int> seen(crossings, 0);
        std::vector<std::array<Visit, 2>> visits(crossings);
        std::vector<int> side_edges(side_count, -1);
        for (std::size_t p = 0; p < walk.size(); ++p) {
            const Visit& v = walk[p];
            word[p] = v.crossing;
            check(v.out_slot == (v.in_slot + 2) % 4, "strand must pass straight through");
            check(seen[v.crossing] < 2, "crossing passed more than twice");
            visits[v.crossing][seen[v.crossing]++] = v;
            if (v.side >= 0) {
                check(side_edges[v.side] < 0, "side realized twice");
                side_edges[v.side] = static_cast<int>(p);
            }
        }
        for (int c = 0; c < crossings; ++c) check(seen[c] == 2, "crossing passed once");
        for (int s = 0; s < side_count; ++s) check(side_edges[s] >= 0, "side not realized");

        // Sign from the counterclockwise slot cycle at the crossing: positive
        // when it reads first-in, second-in, first-out, second-out.
        std::vector<bool> neg(crossings);
        for (int c = 0; c < crossings; ++c) {
            int i1 = visits[c][0].in_slot;
            int i2 = visits[c][1].in_slot;
            if (i2 == (i1 + 1) % 4)
                neg[c] = false;
            else if (i2 == (i1 + 3) % 4)
                neg[c] = true;
            else
                internal_error("strands must cross transversally");
        }
        return {CurveMap::from_word(word, neg), std::move(side_edges)};
    }
};

// Corner slot layout of a polygon with corners placed counterclockwise:
// slot 0 carries side k, slot 1 side k-1, slots 2 and 3 the stubs opposite
// them. Walking counterclockwise around the outside, the stubs appear as
// slot 2 then slot 3 at each corner.
Unit side_unit(const std::vector<int>& corner, int s, bool forward, int stub_fwd,
               int stub_rev, int side_id) {
    int n = static_cast<int>(corner.size());
    int t = (s + 1) % n;
    Unit u;
    if (forward) {
        u.entry_stub = stub_fwd;
        u.exit_stub = stub_rev;
        u.steps = {{corner[s], 2, 0, side_id}, {corner[t], 1, 3, -1}};
    } else {
        u.entry_stub = stub_rev;
        u.exit_stub = stub_fwd;
        u.steps = {{corner[t], 3, 1, side_id}, {corner[s], 0, 2, -1}};
    }
    return u;
}

}  // namespace

Completion complete_raw(const RawGon& gon) {
    const int n = gon.n;
    check(n >= 2, "fragment needs at least two sides");
    check(static_cast<int>(gon.bits.size()) == n, "direction bits do not match the side count");
    check(static_cast<int>(gon.visit.size()) == n, "visit order does not match the side count");
    std::vector<int> hit(n, 0);
    for (int p : gon.visit) {
        check(p >= 0 && p < n, "visit position out of range");
        ++hit[p];
    }
    for (int p = 0; p < n; ++p) check(hit[p] == 1, "visit order must be a permutation");

    Builder bld;
    bld.stub_count = 2 * n;
    bld.side_count = n;
    std::vector<int> corner(n);
    for (int k = 0; k < n; ++k) corner[k] = bld.new_crossing();
    auto stub2 = [&](int c) { return (2 * c - 1 + 2 * n) % (2 * n); };
    auto stub3 = [&](int c) { return 2 * c; };
    for (int j = 0; j < n; ++j) {
        int s = gon.visit[j];
        bld.units.push_back(
            side_unit(corner, s, gon.bits[s] != 0, stub2(s), stub3((s + 1) % n), s));
    }
    return bld.run();
}

Completion complete_gon_class(const GonClass& cls) {
    for (const TypeAlignment& ta : type_assignment(cls.n))
        if (ta.type_number == cls.type_number) {
            RawGon gon;
            gon.n = cls.n;
            gon.bits = ta.pattern.bits;
            for (char ch : cls.canonical_sequence) gon.visit.push_back(ch - 'a');
            return complete_raw(gon);
        }
    throw Error("no type " + std::to_string(cls.type_number) + " among " +
                std::to_string(cls.n) + "-gons");
}

Completion complete_joint(const joint::Datum& datum) {
    Builder bld;
    bld.stub_count = 10;
    bld.side_count = 7;
    std::vector<int> gc(5);
    for (int k = 0; k < 5; ++k) gc[k] = bld.new_crossing();
    int q = bld.new_crossing();

    // Stub angles counterclockwise around the joint. The 3-gon rides outside
    // the 5-gon on the shared side, its apex q between the corners gc[0] and
    // gc[1]; the 3-gon sides t1 = gc[0]..q and t2 = q..gc[1] continue the
    // 5-gon sides 4 and 1 straight through the shared corners, so q's slots
    // carry t2, t1 and their opposite stubs while gc[0] and gc[1] each give
    // one slot to a t side.
    enum Stub {
        kQOppT2 = 0,
        kQOppT1 = 1,
        kG1Slot3 = 2,
        kG2Slot2 = 3,
        kG2Slot3 = 4,
        kG3Slot2 = 5,
        kG3Slot3 = 6,
        kG4Slot2 = 7,
        kG4Slot3 = 8,
        kG0Slot2 = 9,
    };

    std::array<Unit, 5> strand;  // shared side, t2+g1 chain, g2, g3, g4+t1 chain
    auto unit_of = [](int side) {
        switch (side) {
            case 0: return 0;
            case 1: case 6: return 1;
            case 2: return 2;
            case 3: return 3;
            default: return 4;  // 4 and 5
        }
    };

    if (datum.g_bits[0]) {
        strand[0].entry_stub = kG0Slot2;
        strand[0].exit_stub = kG1Slot3;
        strand[0].steps = {{gc[0], 2, 0, 0}, {gc[1], 1, 3, -1}};
    } else {
        strand[0].entry_stub = kG1Slot3;
        strand[0].exit_stub = kG0Slot2;
        strand[0].steps = {{gc[1], 3, 1, 0}, {gc[0], 0, 2, -1}};
    }
    if (datum.g_bits[1]) {
        strand[1].entry_stub = kQOppT2;
        strand[1].exit_stub = kG2Slot3;
        strand[1].steps = {{q, 2, 0, 6}, {gc[1], 2, 0, 1}, {gc[2], 1, 3, -1}};
    } else {
        strand[1].entry_stub = kG2Slot3;
        strand[1].exit_stub = kQOppT2;
        strand[1].steps = {{gc[2], 3, 1, 1}, {gc[1], 0, 2, 6}, {q, 0, 2, -1}};
    }
    strand[2] = side_unit(gc, 2, datum.g_bits[2] != 0, kG2Slot2, kG3Slot3, 2);
    strand[3] = side_unit(gc, 3, datum.g_bits[3] != 0, kG3Slot2, kG4Slot3, 3);
    if (datum.g_bits[4]) {
        strand[4].entry_stub = kG4Slot2;
        strand[4].exit_stub = kQOppT1;
        strand[4].steps = {{gc[4], 2, 0, 4}, {gc[0], 1, 3, 5}, {q, 1, 3, -1}};
    } else {
        strand[4].entry_stub = kQOppT1;
        strand[4].exit_stub = kG4Slot2;
        strand[4].steps = {{q, 3, 1, 5}, {gc[0], 3, 1, 4}, {gc[4], 0, 2, -1}};
    }

    int prev = -1;
    for (int side : datum.order) {
        int u = unit_of(side);
        if (u == prev) continue;  // second half of a straight-through chain
        bld.units.push_back(strand[u]);
        prev = u;
    }
    check(bld.units.size() == 5, "joint strands must chain into five units");
    return bld.run();
}

}  // namespace scurve::complete
