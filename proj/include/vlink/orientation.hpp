#pragma once

#include <optional>
#include <vector>

#include "vlink/gauss_code.hpp"

namespace vlink {

// Which points flip the direction of travel:
//   Alternate: classical passages and cut points (virtual passages do not flip),
//   Cut:       cut points only,
//   Virtual:   virtual passages only.
enum class OrientationFlavor { Alternate, Cut, Virtual };

// A direction bit per segment between flip points, recorded as the bit of
// the segment entering each passage. Bit 0 agrees with the base orientation.
// The walk of a component starts just before passage 0, i.e. after all cut
// points of the last slot; the segment containing that start point carries
// start_bits[component].
struct OrientationAssignment {
    OrientationFlavor flavor = OrientationFlavor::Alternate;
    std::vector<std::vector<uint8_t>> entry_bits;  // per component, per extended position
    std::vector<uint8_t> start_bits;

    uint8_t entry_bit(int component, int position) const {
        return entry_bits[component][position];
    }
};

struct OrientationResult {
    std::optional<OrientationAssignment> assignment;
    int offending_component = -1;  // component with an odd flip count, if any
    bool feasible() const { return assignment.has_value(); }
};

// Feasible iff every component has an even number of flip points and each
// chord's two passages get opposite types, where the type of passage e is
// x_comp xor (number of flip points strictly before e). Chord constraints
// are solved over GF(2) by union-find with parity; free variables are 0.
OrientationResult solve_alternate(const ExtendedGaussCode& code);

// Cut or Virtual flavor: no chord constraints, feasible iff every component
// has an even flip count; the segment containing each component's start
// keeps the base direction.
OrientationResult solve_flavor(const ExtendedGaussCode& code, OrientationFlavor flavor);

// Normality of the underlying diagram (cut points erased).
bool is_normal(const ExtendedGaussCode& code);

// Whether the code's cut points form a cut system.
bool is_cut_system(const ExtendedGaussCode& code);

// Two cut points per virtual crossing, one in the slot immediately after
// each of its passages. Requires an empty cut set.
ExtendedGaussCode canonical_cut_system(const ExtendedGaussCode& code);

// Chords with an odd number of chord endpoints strictly inside the
// tail-to-head arc I_c. Knots only. Sorted by chord id.
std::vector<int> odd_crossings(const ExtendedGaussCode& code);

// Chord endpoints strictly inside I_c of the given chord (knots only).
int interior_endpoint_count(const ExtendedGaussCode& code, int chord_id);
// Cut points strictly inside I_c (knots only).
int interior_cut_count(const ExtendedGaussCode& code, int chord_id);

}  // namespace vlink
