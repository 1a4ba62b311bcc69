#include <doctest.h>

#include <algorithm>

#include "vlink/codec.hpp"
#include "vlink/errors.hpp"
#include "vlink/generate.hpp"
#include "vlink/moves.hpp"
#include "vlink/orientation.hpp"

using namespace vlink;

namespace {

ExtendedGaussCode t3() { return parse("O1+ U2+ O3+ U1+ O2+ U3+"); }
ExtendedGaussCode vt() { return parse("O1+ O2+ U1+ U2+"); }
ExtendedGaussCode vtx() { return parse("O1+ O2+ V1 # U1+ U2+ V1 #"); }

}  // namespace

TEST_CASE("solve_alternate on the classical trefoil") {
    auto res = solve_alternate(t3());
    REQUIRE(res.feasible());
    // Each chord gets one sink and one source: entry bits differ.
    for (const auto& ch : chords_of(t3())) {
        auto& a = *res.assignment;
        CHECK(a.entry_bit(ch.over.component, ch.over.position) !=
              a.entry_bit(ch.under.component, ch.under.position));
    }
}

TEST_CASE("solve_alternate rejects the virtualized family code") {
    CHECK(!solve_alternate(vt()).feasible());
}

TEST_CASE("solve_alternate accepts the canonical cut system") {
    CHECK(solve_alternate(vtx()).feasible());
}

TEST_CASE("is_normal") {
    CHECK(is_normal(t3()));
    CHECK(!is_normal(vt()));
    CHECK(!is_normal(vtx()));  // cut points are erased first
}

TEST_CASE("is_cut_system") {
    CHECK(is_cut_system(t3()));  // empty set is a cut system on a normal code
    CHECK(is_cut_system(vtx()));

    auto one_cut = vt();
    one_cut.add_cut(Slot{0, 0});
    CHECK(!is_cut_system(one_cut));  // odd flip count
}

TEST_CASE("canonical_cut_system") {
    CHECK(canonical_cut_system(t3()) == t3());

    auto vtx_bare = parse("O1+ O2+ V1 U1+ U2+ V1");
    CHECK(canonical_cut_system(vtx_bare) == vtx());

    CHECK_THROWS_AS(canonical_cut_system(vtx()), DomainError);  // cut set not empty

    Rng rng(5);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 20; ++i) {
        auto d = random_diagram(rng, opts);
        auto canon = canonical_cut_system(d);
        CHECK(canon.cut_count() == 2 * num_virtuals(d));
        CHECK(is_cut_system(canon));
    }
}

TEST_CASE("solve_flavor Virtual") {
    auto vhl = parse("O1+ V1\nU1+ V1");
    auto res = solve_flavor(vhl, OrientationFlavor::Virtual);
    CHECK(!res.feasible());
    CHECK(res.offending_component == 0);

    Rng rng(29);
    CodeGenOptions opts;
    opts.min_components = 2;
    opts.max_components = 3;
    opts.even_components = true;
    for (int i = 0; i < 20; ++i) {
        auto d = random_diagram(rng, opts);
        CHECK(solve_flavor(d, OrientationFlavor::Virtual).feasible());
    }
}

TEST_CASE("solve_flavor Cut on valid cut systems of even diagrams") {
    Rng rng(31);
    CodeGenOptions opts;
    opts.min_components = 2;
    opts.max_components = 3;
    opts.even_components = true;
    for (int i = 0; i < 20; ++i) {
        auto dp = scramble_cut_system(rng, random_diagram(rng, opts), 6);
        CHECK(solve_flavor(dp, OrientationFlavor::Cut).feasible());
    }
}

TEST_CASE("odd_crossings") {
    CHECK(odd_crossings(t3()).empty());
    CHECK(interior_endpoint_count(t3(), 0) == 2);
    CHECK(interior_endpoint_count(t3(), 1) == 2);
    CHECK(interior_endpoint_count(t3(), 2) == 2);

    auto odd = odd_crossings(vt());
    CHECK(odd == std::vector<int>{0, 1});
    CHECK(interior_endpoint_count(vt(), 0) == 1);

    ExtendedGaussCode u0;
    u0.components.push_back({});
    CHECK(odd_crossings(u0).empty());

    CHECK_THROWS_AS(odd_crossings(parse("O1+\nU1+")), DomainError);
}

TEST_CASE("solver feasibility matches the all-chords-even oracle on knots") {
    Rng rng(37);
    CodeGenOptions opts;
    opts.min_components = 1;
    opts.max_components = 1;
    opts.max_chords = 7;
    for (int i = 0; i < 60; ++i) {
        auto plain = random_plain_code(rng, opts);
        bool feasible = solve_alternate(plain).feasible();
        bool all_even = odd_crossings(plain).empty();
        CHECK(feasible == all_even);
    }
}

TEST_CASE("condition (*): cut plus endpoint counts inside I_c are even") {
    Rng rng(41);
    CodeGenOptions opts;
    opts.min_components = 1;
    opts.max_components = 1;
    opts.max_chords = 6;
    for (int i = 0; i < 40; ++i) {
        auto dp = scramble_cut_system(rng, random_diagram(rng, opts), 6);
        REQUIRE(is_cut_system(dp));
        for (int x = 0; x < num_chords(dp); ++x) {
            int total = interior_endpoint_count(dp, x) + interior_cut_count(dp, x);
            CHECK(total % 2 == 0);
        }
    }
}

TEST_CASE("cut systems have an even number of cut points") {
    Rng rng(43);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 40; ++i) {
        auto dp = scramble_cut_system(rng, random_diagram(rng, opts), 7);
        CHECK(dp.cut_count() % 2 == 0);
        if (is_even(dp).even)
            for (int c = 0; c < dp.num_components(); ++c)
                CHECK(dp.cut_count_on(c) % 2 == 0);
    }
}

TEST_CASE("cut point moves preserve is_cut_system") {
    Rng rng(47);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 30; ++i) {
        auto dp = canonical_cut_system(random_diagram(rng, opts));
        WalkOptions wopts;
        wopts.cut_moves = true;
        auto res = random_walk(dp, 1, rng.derive(), wopts);
        CHECK(is_cut_system(res.code));
    }
}
