#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlink/gauss_code.hpp"

namespace vlink {

// R1/R2/R3 are Reidemeister rewrites on the plain projection followed by a
// fresh realization (the accompanying detours); Detour alone re-realizes.
// CP moves edit only the cut multiset: CP1 slides a cut point across a
// virtual passage, CP2 inserts or removes a same-slot pair, CP3 inserts or
// removes four cut points flanking a classical crossing's two passages.
enum class MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    Detour,
    CP1,
    CP2Add,
    CP2Remove,
    CP3Add,
    CP3Remove,
};

const char* move_kind_name(MoveKind k);  // "R1+", "R1-", ..., "CP3-"

struct MoveInstance {
    MoveKind kind = MoveKind::Detour;

    // Sites; which fields matter depends on the kind:
    //   R1Remove: chord, component/slot = the adjacent gap.
    //   R1Add:    component/slot = plain insertion gap, sign, flag = over first.
    //   R2Remove: chord/chord2, component/slot = over gap, component2/slot2 = under gap.
    //   R2Add:    component/slot = over gap, component2/slot2 = under gap,
    //             sign = sign of the first chord, flag = parallel under order.
    //   R3:       chord=x chord2=y chord3=z, (component,slot) top gap,
    //             (component2,slot2) middle gap, (component3,slot3) bottom gap.
    //   Detour:   seed only.
    //   CP1:      component, slot = from, slot2 = to.
    //   CP2Add/CP2Remove: component, slot (extended).
    //   CP3Add/CP3Remove: chord.
    int chord = -1, chord2 = -1, chord3 = -1;
    int component = -1, slot = -1;
    int component2 = -1, slot2 = -1;
    int component3 = -1, slot3 = -1;
    int sign = +1;
    bool flag = false;
    uint64_t seed = 0;  // realization seed for R moves and Detour

    std::string describe() const;
};

// All applicable instances. R moves and Detour require an empty cut set;
// cut point moves are listed whenever their local pattern is present.
std::vector<MoveInstance> enumerate_moves(const ExtendedGaussCode& code);

ExtendedGaussCode apply_move(const ExtendedGaussCode& code, const MoveInstance& move);

struct WalkOptions {
    int max_chords = 7;      // R1+/R2+ are skipped beyond this
    bool cut_moves = false;  // walk cut point moves instead of R moves
};

struct WalkResult {
    ExtendedGaussCode code;
    std::vector<MoveInstance> trace;
};

// Seeded, reproducible walk; steps with no applicable instance are skipped.
WalkResult random_walk(const ExtendedGaussCode& code, int steps, uint64_t seed,
                       WalkOptions opts = {});

}  // namespace vlink
