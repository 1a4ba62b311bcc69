#pragma once

#include <array>
#include <vector>

#include "vlink/gauss_code.hpp"

namespace vlink {

// One arc of the base diagram between consecutive cut points, lifted into
// the covering. Arc j on a component runs from its j-th cut point to the
// next one in walk order; a component without cut points is a single arc 0.
struct ArcRef {
    int base_component = 0;
    int arc_index = 0;
    int copy = 0;  // 0 = base copy, 1 = the parallel copy
    auto operator<=>(const ArcRef&) const = default;
};

// The coherent double covering at the Gauss-code level: two copies of every
// passage, chords duplicated within each copy, and the successor relation
// toggling the copy flag once per cut point in a slot. Virtual passages of
// the base are discarded; the output is a plain code.
struct CoverCode {
    PlainGaussCode code;

    // Base component i lifts to cover components pairing[i] = {D^i_1, D^i_2}.
    // D^i_1 contains the copy-0 lift of the arc following the first cut
    // point of P^i (the copy-0 circle when P^i is empty). Both entries are
    // equal when the component has an odd cut count and lifts to one circle.
    std::vector<std::array<int, 2>> pairing;

    std::vector<std::array<int, 2>> chord_map;  // base chord -> lifted chord ids {copy0, copy1}
    std::vector<int> base_of_cover;             // cover component -> base component
    std::vector<std::vector<ArcRef>> arc_trace; // per cover component, arcs in traversal order

    // lift_component[c][i][copy]: cover component through extended position
    // i of base component c with the given copy flag.
    std::vector<std::vector<std::array<int, 2>>> lift_component;
};

CoverCode coherent_double_cover(const ExtendedGaussCode& code);  // throws NotACutSystem

// phi_0: the cover over the canonical cut system. Requires an empty cut set.
CoverCode canonical_cover(const ExtendedGaussCode& code);

// The covering with signs adjusted by the cut orientation: a lifted chord's
// effective sign is the base sign times (-1)^(number of its two passages on
// reversed lifted arcs). The inherited direction is constant along every
// cover component, so reversal is a per-component bit.
struct OrientedCover {
    CoverCode cover;
    std::vector<uint8_t> component_reversed;     // per cover component
    std::vector<std::array<int, 2>> lifted_sign; // base chord -> effective sign {copy0, copy1}
};
OrientedCover cover_with_cut_orientation(const ExtendedGaussCode& code);

}  // namespace vlink
