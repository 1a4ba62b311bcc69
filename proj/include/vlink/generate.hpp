#pragma once

#include <cstdint>

#include "vlink/gauss_code.hpp"
#include "vlink/rng.hpp"

namespace vlink {

struct CodeGenOptions {
    int min_chords = 1;
    int max_chords = 6;
    int min_components = 1;
    int max_components = 3;
    bool even_components = false;  // even classical count per component
    int max_virtuals = -1;         // resample realizations above this; -1 = unlimited
};

PlainGaussCode random_plain_code(Rng& rng, const CodeGenOptions& opts);

// A realized (genus-zero) extended code for a random plain code.
ExtendedGaussCode random_diagram(Rng& rng, const CodeGenOptions& opts);

// A random valid cut system: the canonical one scrambled by cut point moves.
ExtendedGaussCode scramble_cut_system(Rng& rng, const ExtendedGaussCode& diagram, int moves);

}  // namespace vlink
