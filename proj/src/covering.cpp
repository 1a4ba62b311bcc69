#include "vlink/covering.hpp"

#include <cassert>

#include "vlink/errors.hpp"
#include "vlink/orientation.hpp"

namespace vlink {

namespace {

// Per-component cut bookkeeping. Cut points are numbered 0..k-1 in walk
// order (by slot, multiplicities expanded); arc j runs from cut j to cut
// j+1, so arc 0 follows the first cut point and arc k-1 contains the
// component's start.
struct CutLayout {
    int k = 0;
    std::vector<int> slot_of_cut;
    std::vector<int> cuts_before;   // per position p: cuts in slots < p
    std::vector<int> toggle;        // per slot: cut count mod 2
    std::vector<int> first_cut_in_slot;

    int arc_of_position(int p) const {
        if (k == 0) return 0;
        int before = cuts_before[p];
        return before == 0 ? k - 1 : before - 1;
    }
};

CutLayout cut_layout(const ExtendedGaussCode& code, int c) {
    CutLayout L;
    const int m = static_cast<int>(code.components[c].size());
    const int nslots = code.slot_count(c);
    L.toggle.assign(nslots, 0);
    L.first_cut_in_slot.assign(nslots, -1);
    L.cuts_before.assign(m + 1, 0);
    for (int s = 0; s < nslots; ++s) {
        int cnt = code.cuts_in_slot(Slot{c, s});
        if (cnt > 0) L.first_cut_in_slot[s] = L.k;
        for (int t = 0; t < cnt; ++t) L.slot_of_cut.push_back(s);
        L.k += cnt;
        L.toggle[s] = cnt % 2;
        if (s + 1 <= m) L.cuts_before[s + 1] = L.k;
    }
    return L;
}

}  // namespace

CoverCode coherent_double_cover(const ExtendedGaussCode& code) {
    if (!is_cut_system(code))
        throw DomainError(Fault::NotACutSystem, "cut points do not form a cut system");

    const int r = code.num_components();
    const int nch = num_chords(code);

    // Cycles of the successor map (position, copy) -> (position+1, copy ^
    // slot toggle), per base component, plus labels D^i_1 / D^i_2.
    std::vector<std::vector<std::pair<int, int>>> cycles;  // (position, copy)
    std::vector<int> base_of;
    std::vector<std::vector<std::array<int, 2>>> comp_of(r);
    std::vector<std::array<int, 2>> pairing(r);
    std::vector<CutLayout> layouts(r);

    for (int c = 0; c < r; ++c) {
        const auto& comp = code.components[c];
        const int m = static_cast<int>(comp.size());
        layouts[c] = cut_layout(code, c);
        const auto& L = layouts[c];
        comp_of[c].assign(m, {-1, -1});

        if (m == 0) {
            // Crossing-free circle: odd cut count gives one doubled circle,
            // otherwise two.
            int d1 = static_cast<int>(cycles.size());
            cycles.push_back({});
            base_of.push_back(c);
            int d2 = d1;
            if (L.k % 2 == 0) {
                d2 = static_cast<int>(cycles.size());
                cycles.push_back({});
                base_of.push_back(c);
            }
            pairing[c] = {d1, d2};
            continue;
        }

        for (int start_copy = 0; start_copy < 2; ++start_copy) {
            if (comp_of[c][0][start_copy] != -1) continue;
            int idx = static_cast<int>(cycles.size());
            cycles.push_back({});
            base_of.push_back(c);
            int pos = 0, copy = start_copy;
            do {
                comp_of[c][pos][copy] = idx;
                cycles[idx].push_back({pos, copy});
                copy ^= L.toggle[pos];
                pos = (pos + 1) % m;
            } while (!(pos == 0 && copy == start_copy));
        }

        if (L.k == 0) {
            pairing[c] = {comp_of[c][0][0], comp_of[c][0][1]};
        } else {
            // D^i_1 holds the copy-0 lift of the arc after the first cut
            // point: just after that cut the copy flag is 0, and the walk
            // reaches the next passage after the slot's remaining cuts.
            int s = L.slot_of_cut[0];
            int rest = (code.cuts_in_slot(Slot{c, s}) - 1) % 2;
            int d1 = comp_of[c][(s + 1) % m][rest];
            int d2 = d1;
            for (int copy = 0; copy < 2; ++copy)
                if (comp_of[c][0][copy] != d1) d2 = comp_of[c][0][copy];
            pairing[c] = {d1, d2};
        }
    }

    const int nraw = static_cast<int>(cycles.size());

    // Deterministic output order: D^1_1, D^1_2, D^2_1, ...
    std::vector<int> new_index(nraw, -1);
    int next = 0;
    for (int c = 0; c < r; ++c)
        for (int k = 0; k < 2; ++k)
            if (new_index[pairing[c][k]] == -1) new_index[pairing[c][k]] = next++;
    assert(next == nraw);

    CoverCode out;
    out.code.components.resize(nraw);
    out.pairing.resize(r);
    out.base_of_cover.resize(nraw);
    out.arc_trace.resize(nraw);
    out.lift_component.resize(r);
    out.chord_map.resize(nch);
    for (int x = 0; x < nch; ++x) out.chord_map[x] = {2 * x, 2 * x + 1};
    for (int c = 0; c < r; ++c)
        out.pairing[c] = {new_index[pairing[c][0]], new_index[pairing[c][1]]};
    for (int idx = 0; idx < nraw; ++idx) out.base_of_cover[new_index[idx]] = base_of[idx];
    for (int c = 0; c < r; ++c) {
        const int m = static_cast<int>(code.components[c].size());
        out.lift_component[c].assign(m, {-1, -1});
        for (int p = 0; p < m; ++p)
            for (int copy = 0; copy < 2; ++copy)
                out.lift_component[c][p][copy] = new_index[comp_of[c][p][copy]];
    }

    // Passage sequences and arc traces, walking each cycle from its anchor
    // (the position after the first cut point, or position 0 without cuts).
    for (int idx = 0; idx < nraw; ++idx) {
        const int c = base_of[idx];
        const auto& comp = code.components[c];
        const int m = static_cast<int>(comp.size());
        const auto& L = layouts[c];
        auto& seq = out.code.components[new_index[idx]];
        auto& trace = out.arc_trace[new_index[idx]];

        if (m == 0) {
            // Pure cut circle: arcs chain (j, copy) -> (j+1, copy^1).
            if (L.k == 0) {
                int which = new_index[idx] == out.pairing[c][0] ? 0 : 1;
                trace.push_back(ArcRef{c, 0, which});
                continue;
            }
            int start_copy = new_index[idx] == out.pairing[c][0] ? 0 : 1;
            int j = 0, copy = start_copy;
            do {
                trace.push_back(ArcRef{c, j, copy});
                copy ^= 1;
                j = (j + 1) % L.k;
            } while (!(j == 0 && copy == start_copy));
            continue;
        }

        const auto& cyc = cycles[idx];
        int anchor_pos = L.k == 0 ? 0 : (L.slot_of_cut[0] + 1) % m;
        int offset = 0;
        for (int t = 0; t < static_cast<int>(cyc.size()); ++t)
            if (cyc[t].first == anchor_pos) {
                offset = t;
                break;
            }

        for (int t = 0; t < static_cast<int>(cyc.size()); ++t) {
            auto [pos, copy] = cyc[(offset + t) % cyc.size()];
            const Passage& p = comp[pos];
            if (p.is_classical())
                seq.push_back(Passage::classical(2 * p.id + copy, p.role, p.sign));
            // Arc of this position, then one new arc per cut point crossed
            // in the slot after it (empty arcs between same-slot cuts
            // included).
            ArcRef here{c, L.arc_of_position(pos), copy};
            if (trace.empty() || !(trace.back() == here)) trace.push_back(here);
            int cnt = code.cuts_in_slot(Slot{c, pos});
            if (cnt > 0) {
                int q0 = L.first_cut_in_slot[pos];
                for (int t2 = 0; t2 < cnt; ++t2) {
                    copy ^= 1;
                    trace.push_back(ArcRef{c, q0 + t2, copy});
                }
            }
        }
        if (trace.size() > 1 && trace.front() == trace.back()) trace.pop_back();
    }

    // Display names: base chord names (or 1-based numbers), '*' on copy 1.
    out.code.chord_names.resize(2 * nch);
    for (int x = 0; x < nch; ++x) {
        std::string base = x < static_cast<int>(code.chord_names.size())
                               ? code.chord_names[x]
                               : std::to_string(x + 1);
        out.code.chord_names[2 * x] = base;
        out.code.chord_names[2 * x + 1] = base + "*";
    }
    return out;
}

CoverCode canonical_cover(const ExtendedGaussCode& code) {
    return coherent_double_cover(canonical_cut_system(code));
}

OrientedCover cover_with_cut_orientation(const ExtendedGaussCode& code) {
    if (!is_even(code).even)
        throw DomainError(Fault::NotEven, "cut orientation covers need an even diagram");
    auto cut = solve_flavor(code, OrientationFlavor::Cut);
    if (!cut.feasible())
        throw DomainError(Fault::NotACutSystem, "cut orientation infeasible");

    OrientedCover oc;
    oc.cover = coherent_double_cover(code);
    const auto& cover = oc.cover;
    const int ncov = static_cast<int>(cover.code.components.size());
    oc.component_reversed.assign(ncov, 0);

    // A lifted arc inherits its base arc's cut-orientation bit, negated on
    // copy 1. Crossing a splice toggles both the copy flag and the base
    // bit, so the inherited bit is constant along each cover component.
    std::vector<int8_t> assigned(ncov, -1);
    for (int c = 0; c < code.num_components(); ++c) {
        const int m = static_cast<int>(code.components[c].size());
        for (int p = 0; p < m; ++p) {
            uint8_t base_bit = cut.assignment->entry_bit(c, p);
            for (int copy = 0; copy < 2; ++copy) {
                int idx = cover.lift_component[c][p][copy];
                uint8_t bit = base_bit ^ static_cast<uint8_t>(copy);
                if (assigned[idx] == -1) {
                    assigned[idx] = static_cast<int8_t>(bit);
                    oc.component_reversed[idx] = bit;
                } else {
                    assert(assigned[idx] == static_cast<int8_t>(bit));
                }
            }
        }
    }

    // Both lifts of a chord see the same pair of strand reversals, hence
    // carry the same effective sign: the base sign adjusted by the cut
    // orientation.
    const auto chords = chords_of(code);
    oc.lifted_sign.resize(chords.size());
    for (const auto& ch : chords) {
        uint8_t b1 = cut.assignment->entry_bit(ch.over.component, ch.over.position);
        uint8_t b2 = cut.assignment->entry_bit(ch.under.component, ch.under.position);
        int eff = (b1 ^ b2) ? -ch.sign : ch.sign;
        oc.lifted_sign[ch.id] = {eff, eff};
    }
    return oc;
}

}  // namespace vlink
