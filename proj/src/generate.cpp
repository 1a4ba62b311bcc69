#include "vlink/generate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "vlink/errors.hpp"
#include "vlink/moves.hpp"
#include "vlink/orientation.hpp"
#include "vlink/realize.hpp"

namespace vlink {

PlainGaussCode random_plain_code(Rng& rng, const CodeGenOptions& opts) {
    int n = opts.min_chords + rng.below(opts.max_chords - opts.min_chords + 1);
    int r = opts.min_components + rng.below(opts.max_components - opts.min_components + 1);

    // Distribute 2n passage endpoints over r components.
    std::vector<int> sizes(r, 0);
    if (opts.even_components) {
        for (int t = 0; t < n; ++t) sizes[rng.below(r)] += 2;
    } else {
        for (int t = 0; t < 2 * n; ++t) sizes[rng.below(r)] += 1;
        // Total is even; fix odd pairs by moving one endpoint.
        for (int c = 0; c < r; ++c) {
            if (sizes[c] % 2 == 0) continue;
            for (int d = c + 1; d < r; ++d)
                if (sizes[d] % 2 == 1) {
                    sizes[c] += 1;
                    sizes[d] -= 1;
                    break;
                }
        }
    }

    // Random pairing of the endpoint positions into chords.
    std::vector<int> all(2 * n);
    std::iota(all.begin(), all.end(), 0);
    rng.shuffle(all);

    PlainGaussCode code;
    code.components.resize(r);
    std::vector<Passage> flat(2 * n);
    for (int x = 0; x < n; ++x) {
        int a = all[2 * x], b = all[2 * x + 1];
        bool a_over = rng.coin();
        int sign = rng.pick_sign();
        flat[a] = Passage::classical(x, a_over ? Role::Over : Role::Under, sign);
        flat[b] = Passage::classical(x, a_over ? Role::Under : Role::Over, sign);
    }
    int at = 0;
    for (int c = 0; c < r; ++c)
        for (int t = 0; t < sizes[c]; ++t) code.components[c].push_back(flat[at++]);
    return normalize_ids(code);
}

ExtendedGaussCode random_diagram(Rng& rng, const CodeGenOptions& opts) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        PlainGaussCode plain = random_plain_code(rng, opts);
        for (int tries = 0; tries < 8; ++tries) {
            ExtendedGaussCode code = realize(plain, rng.derive()).code;
            if (opts.max_virtuals < 0 || num_virtuals(code) <= opts.max_virtuals) return code;
        }
    }
    // Fall back to something tiny but valid.
    CodeGenOptions small = opts;
    small.min_chords = 1;
    small.max_chords = 1;
    small.min_components = 1;
    small.max_components = 1;
    return realize(random_plain_code(rng, small), rng.derive()).code;
}

ExtendedGaussCode scramble_cut_system(Rng& rng, const ExtendedGaussCode& diagram, int moves) {
    ExtendedGaussCode with_cuts =
        diagram.has_cuts() ? diagram : canonical_cut_system(diagram);
    WalkOptions opts;
    opts.cut_moves = true;
    auto walk = random_walk(with_cuts, moves, rng.derive(), opts);
    assert(is_cut_system(walk.code));
    return walk.code;
}

}  // namespace vlink
