#include "vlink/selftest.hpp"

#include <map>
#include <sstream>

#include "vlink/codec.hpp"
#include "vlink/covering.hpp"
#include "vlink/errors.hpp"
#include "vlink/generate.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/orientation.hpp"
#include "vlink/realize.hpp"

namespace vlink::selftest {

namespace {

struct Ctx {
    SuiteResult res;

    void check(bool ok, const std::string& msg) {
        if (ok) return;
        res.failures++;
        if (res.notes.size() < 3) res.notes.push_back(msg);
    }
    void count_case() { res.cases++; }
};

uint64_t suite_seed(uint64_t seed, int suite, int item) {
    uint64_t h = seed;
    h ^= 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(suite) * 0xbf58476d1ce4e5b9ull;
    h ^= static_cast<uint64_t>(item + 1) * 0x94d049bb133111ebull;
    h ^= h >> 31;
    return h;
}

std::string describe_code(const ExtendedGaussCode& code) {
    std::string s = serialize(code);
    for (auto& ch : s)
        if (ch == '\n') ch = '/';
    return s;
}

int cases_for(int full, int override_cases) { return override_cases > 0 ? override_cases : full; }

// (base component, arc index, copy) -> cover component.
std::map<std::tuple<int, int, int>, int> arc_components(const CoverCode& cover) {
    std::map<std::tuple<int, int, int>, int> at;
    for (int cc = 0; cc < static_cast<int>(cover.arc_trace.size()); ++cc)
        for (const auto& a : cover.arc_trace[cc])
            at[{a.base_component, a.arc_index, a.copy}] = cc;
    return at;
}

SuiteResult suite_odd_writhe(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "1";
    ctx.res.name = "lk_N equals the odd writhe on random knots and cut systems";
    const int N = cases_for(300, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 1, i));
        CodeGenOptions opts;
        opts.min_chords = 1;
        opts.max_chords = 8;
        opts.min_components = 1;
        opts.max_components = 1;
        opts.max_virtuals = 6;
        ExtendedGaussCode knot = random_diagram(rng, opts);
        int64_t expected = odd_writhe(knot);
        for (int t = 0; t < 3; ++t) {
            ctx.count_case();
            ExtendedGaussCode dp = scramble_cut_system(rng, knot, 8);
            int64_t got = lk_n(dp);
            ctx.check(got == expected,
                      "lk_N=" + std::to_string(got) + " odd_writhe=" + std::to_string(expected) +
                          " on " + describe_code(dp));
        }
    }
    return ctx.res;
}

SuiteResult suite_cover_normal(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "2";
    ctx.res.name = "phi(D,P) is normal";
    const int N = cases_for(300, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 2, i));
        CodeGenOptions opts;
        opts.max_chords = 6;
        ExtendedGaussCode dp = scramble_cut_system(rng, random_diagram(rng, opts), 6);
        ctx.count_case();
        auto cover = coherent_double_cover(dp);
        ctx.check(is_normal(cover.code), "cover not normal for " + describe_code(dp));
    }
    return ctx.res;
}

SuiteResult suite_components(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "3";
    ctx.res.name = "cover component structure and arc alternation";
    const int N = cases_for(200, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 3, i));
        bool knot_case = i % 2 == 0;
        CodeGenOptions opts;
        opts.max_chords = 6;
        opts.min_components = knot_case ? 1 : 2;
        opts.max_components = knot_case ? 1 : 3;
        opts.even_components = !knot_case;
        ExtendedGaussCode dp = scramble_cut_system(rng, random_diagram(rng, opts), 6);
        ctx.count_case();
        auto cover = coherent_double_cover(dp);
        int r = dp.num_components();
        ctx.check(cover.code.num_components() == 2 * r,
                  "expected " + std::to_string(2 * r) + " cover components on " +
                      describe_code(dp));
        bool two_per_base = true;
        for (int c = 0; c < r; ++c)
            if (cover.pairing[c][0] == cover.pairing[c][1]) two_per_base = false;
        ctx.check(two_per_base, "a base component lifted to one circle on " + describe_code(dp));

        // Arc alternation: consecutive arcs and the two copies of one arc
        // land in different cover components.
        auto at = arc_components(cover);
        auto lookup = [&](int c, int j, int copy) {
            auto it = at.find({c, j, copy});
            if (it == at.end()) {
                ctx.check(false, "missing lifted arc in arc_trace");
                return -1;
            }
            return it->second;
        };
        for (int c = 0; c < r; ++c) {
            int k = dp.cut_count_on(c);
            if (k < 2) continue;
            for (int j = 0; j < k; ++j)
                for (int copy = 0; copy < 2; ++copy) {
                    int here = lookup(c, j, copy);
                    if (here < 0) continue;
                    ctx.check(lookup(c, (j + 1) % k, copy) != here,
                              "consecutive arcs in one cover component");
                    ctx.check(lookup(c, j, copy ^ 1) != here,
                              "both copies of an arc in one cover component");
                }
        }
    }
    return ctx.res;
}

SuiteResult suite_main_invariance(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "4";
    ctx.res.name = "phi_0 invariant vector is preserved by R moves and detours";
    const int N = cases_for(200, override_cases);
    long applied = 0;
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 4, i));
        CodeGenOptions opts;
        opts.max_chords = 5;
        ExtendedGaussCode code = random_diagram(rng, opts);
        ctx.count_case();
        auto before = cover_invariant_vector(canonical_cover(code));
        WalkOptions wopts;
        wopts.max_chords = 7;
        auto walk = random_walk(code, 12, rng.derive(), wopts);
        applied += static_cast<long>(walk.trace.size());
        auto after = cover_invariant_vector(canonical_cover(walk.code));
        ctx.check(before == after, "phi_0 vector changed along a walk from " +
                                       describe_code(code) + " to " + describe_code(walk.code));
    }
    ctx.check(applied >= 8L * N, "walks applied too few moves to be meaningful");
    return ctx.res;
}

SuiteResult suite_cut_independence(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "5";
    ctx.res.name = "phi(D,P) invariant vector is independent of the cut system";
    const int N = cases_for(200, override_cases);
    long applied = 0;
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 5, i));
        CodeGenOptions opts;
        opts.max_chords = 5;
        ExtendedGaussCode diagram = random_diagram(rng, opts);
        ExtendedGaussCode dp = scramble_cut_system(rng, diagram, 4);
        ctx.count_case();
        auto before = cover_invariant_vector(coherent_double_cover(dp));
        auto evenness = is_even(dp);

        ExtendedGaussCode current = dp;
        WalkOptions wopts;
        wopts.cut_moves = true;
        bool parity_ok = true, system_ok = true;
        for (int step = 0; step < 10; ++step) {
            auto one = random_walk(current, 1, rng.derive(), wopts);
            current = one.code;
            applied += static_cast<long>(one.trace.size());
            if (!is_cut_system(current)) system_ok = false;
            if (current.cut_count() % 2 != 0) parity_ok = false;
            if (evenness.even)
                for (int c = 0; c < current.num_components(); ++c)
                    if (current.cut_count_on(c) % 2 != 0) parity_ok = false;
        }
        ctx.check(system_ok, "cut point move broke the cut system on " + describe_code(dp));
        ctx.check(parity_ok, "cut count parity broke on " + describe_code(dp));
        auto after = cover_invariant_vector(coherent_double_cover(current));
        ctx.check(before == after,
                  "phi(D,P) vector changed across cut systems on " + describe_code(dp));
    }
    ctx.check(applied >= 8L * N, "cut point walks applied too few moves to be meaningful");
    return ctx.res;
}

SuiteResult suite_even_invariants(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "6";
    ctx.res.name = "nu is cut-system independent, equals lambda, and matches the cover sum";
    const int N = cases_for(200, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 6, i));
        CodeGenOptions opts;
        opts.max_chords = 6;
        opts.min_components = 2;
        opts.max_components = 3;
        opts.even_components = true;
        ExtendedGaussCode diagram = random_diagram(rng, opts);
        ctx.count_case();
        int r = diagram.num_components();
        ExtendedGaussCode canon = canonical_cut_system(diagram);
        ExtendedGaussCode scrambled = scramble_cut_system(rng, diagram, 8);
        auto oc = cover_with_cut_orientation(canon);
        auto oc_scrambled = cover_with_cut_orientation(scrambled);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                if (a == b) continue;
                int64_t lam = lambda_abs(diagram, a, b);
                int64_t nu_canon = nu_abs(canon, a, b);
                int64_t nu_scr = nu_abs(scrambled, a, b);
                ctx.check(nu_canon == lam, "nu(canonical) != lambda on " + describe_code(diagram));
                ctx.check(nu_scr == lam, "nu not cut-system independent on " +
                                             describe_code(scrambled));
                for (int k = 0; k < 2; ++k) {
                    int64_t s = cover_over_sum(oc, a, b, k);
                    ctx.check((s < 0 ? -s : s) == lam,
                              "cover over-sum != nu on " + describe_code(diagram));
                    int64_t s2 = cover_over_sum(oc_scrambled, a, b, k);
                    ctx.check((s2 < 0 ? -s2 : s2) == lam,
                              "cover over-sum != nu across cut systems on " +
                                  describe_code(scrambled));
                }
            }
    }
    return ctx.res;
}

SuiteResult suite_q_pairing(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "7";
    ctx.res.name = "Q-set pairing equalities and walk invariance";
    const int N = cases_for(200, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 7, i));
        CodeGenOptions opts;
        opts.max_chords = 5;
        opts.min_components = 2;
        opts.max_components = 3;
        opts.even_components = true;
        ExtendedGaussCode diagram = random_diagram(rng, opts);
        ctx.count_case();
        int r = diagram.num_components();
        ExtendedGaussCode canon = canonical_cut_system(diagram);
        auto cover = coherent_double_cover(canon);
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b) {
                int a1 = cover.pairing[a][0], a2 = cover.pairing[a][1];
                int b1 = cover.pairing[b][0], b2 = cover.pairing[b][1];
                ctx.check(linking2(cover.code, a1, b1) == linking2(cover.code, a2, b2),
                          "lk(i1,j1) != lk(i2,j2) on " + describe_code(diagram));
                ctx.check(linking2(cover.code, a1, b2) == linking2(cover.code, a2, b1),
                          "lk(i1,j2) != lk(i2,j1) on " + describe_code(diagram));
            }

        // Walk invariance of Q sets and self pairs (orientation preserved).
        std::map<std::pair<int, int>, std::array<int64_t, 2>> q_before;
        std::map<int, int64_t> sp_before;
        for (int a = 0; a < r; ++a) {
            sp_before[a] = self_pair_link2(canon, a);
            for (int b = a + 1; b < r; ++b) q_before[{a, b}] = q_set2(canon, a, b);
        }
        WalkOptions wopts;
        wopts.max_chords = 7;
        auto walk = random_walk(diagram, 8, rng.derive(), wopts);
        ExtendedGaussCode canon2 = canonical_cut_system(walk.code);
        for (int a = 0; a < r; ++a) {
            ctx.check(self_pair_link2(canon2, a) == sp_before[a],
                      "self-pair linking changed along a walk on " + describe_code(diagram));
            for (int b = a + 1; b < r; ++b)
                ctx.check(q_set2(canon2, a, b) == q_before[{a, b}],
                          "Q set changed along a walk on " + describe_code(diagram));
        }
    }
    return ctx.res;
}

SuiteResult suite_mirror(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "8";
    ctx.res.name = "lk_N is antisymmetric under switch and reflection";
    const int N = cases_for(300, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 8, i));
        CodeGenOptions opts;
        opts.max_chords = 7;
        opts.min_components = 1;
        opts.max_components = 1;
        ExtendedGaussCode dp = scramble_cut_system(rng, random_diagram(rng, opts), 6);
        ctx.count_case();
        int64_t base = lk_n(dp);
        int64_t sharp = lk_n(mirror_switch(dp, MirrorMode::SwitchAll));
        int64_t dagger = lk_n(mirror_switch(dp, MirrorMode::Reflect));
        ctx.check(sharp == -base && dagger == -base,
                  "mirror antisymmetry failed on " + describe_code(dp));
    }
    return ctx.res;
}

SuiteResult suite_example_magnitudes(uint64_t seed, int override_cases) {
    (void)seed;
    (void)override_cases;
    Ctx ctx;
    ctx.res.id = "9";
    ctx.res.name = "fixture invariant magnitudes";

    // A virtualized-trefoil-family knot: lk_N is +-2, with -2 on mirrors.
    ctx.count_case();
    auto vtx = parse("O1+ O2+ V1 # U1+ U2+ V1 #\n");
    ctx.check(lk_n(vtx) == 2, "lk_N(VTx) != 2");
    ctx.check(lk_n(mirror_switch(vtx, MirrorMode::SwitchAll)) == -2, "lk_N(VTx sharp) != -2");
    ctx.check(lk_n(mirror_switch(vtx, MirrorMode::Reflect)) == -2, "lk_N(VTx dagger) != -2");

    // An even 2-component diagram with |lambda(1,2)| = 2, cross-checked
    // through the cut orientation and the covering sum.
    ctx.count_case();
    auto el2 = parse("O1- V1 O2- V2\nV1 U2- V2 U1-\n");
    ctx.check(lambda_abs(el2, 0, 1) == 2, "|lambda(1,2)| != 2 on the even fixture");
    auto canon = canonical_cut_system(el2);
    ctx.check(nu_abs(canon, 0, 1) == 2, "|nu(1,2)| != 2 on the even fixture");
    auto oc = cover_with_cut_orientation(canon);
    for (int k = 0; k < 2; ++k) {
        int64_t s = cover_over_sum(oc, 0, 1, k);
        ctx.check((s < 0 ? -s : s) == 2, "cover over-sum != 2 on the even fixture");
    }

    // Self-pair cover linking 2 vs 0 distinguishes two even diagrams.
    ctx.count_case();
    auto hopf = parse("O1+ U2+\nU1+ O2+\n");
    ctx.check(self_pair_link2(hopf, 0) == 0 && self_pair_link2(hopf, 1) == 0,
              "split cover self-pair linking != 0 on the Hopf fixture");
    auto vtx_plus_circle = parse("O1+ O2+ V1 U1+ U2+ V1\n()\n");
    auto canon2 = canonical_cut_system(vtx_plus_circle);
    ctx.check(self_pair_link2(canon2, 0) == 4,  // doubled value: lk~ = 2
              "self-pair linking != 2 on the distinguishing fixture");
    return ctx.res;
}

SuiteResult suite_realization(uint64_t seed, int override_cases) {
    Ctx ctx;
    ctx.res.id = "10";
    ctx.res.name = "realizations are planar, faithful, and canonically cuttable";
    const int N = cases_for(500, override_cases);
    for (int i = 0; i < N; ++i) {
        Rng rng(suite_seed(seed, 10, i));
        CodeGenOptions opts;
        opts.max_chords = 6;
        PlainGaussCode plain = random_plain_code(rng, opts);
        for (int s = 0; s < 3; ++s) {
            ctx.count_case();
            auto r = realize(plain, rng.derive());
            bool flat = true;
            for (const auto& piece : genus(r.code, r.rotations))
                if (piece.genus != 0) flat = false;
            ctx.check(flat, "nonzero genus for " + describe_code(plain));
            ctx.check(project_to_plain(r.code) == plain,
                      "projection round-trip failed for " + describe_code(plain));
            ctx.check(is_cut_system(canonical_cut_system(r.code)),
                      "canonical cut system invalid for " + describe_code(r.code));
        }
    }
    return ctx.res;
}

}  // namespace

std::vector<SuiteResult> run_acceptance(uint64_t seed, int cases_override) {
    std::vector<SuiteResult> out;
    out.push_back(suite_odd_writhe(seed, cases_override));
    out.push_back(suite_cover_normal(seed, cases_override));
    out.push_back(suite_components(seed, cases_override));
    out.push_back(suite_main_invariance(seed, cases_override));
    out.push_back(suite_cut_independence(seed, cases_override));
    out.push_back(suite_even_invariants(seed, cases_override));
    out.push_back(suite_q_pairing(seed, cases_override));
    out.push_back(suite_mirror(seed, cases_override));
    out.push_back(suite_example_magnitudes(seed, cases_override));
    out.push_back(suite_realization(seed, cases_override));
    return out;
}

}  // namespace vlink::selftest
