#include <doctest.h>

#include "vlink/codec.hpp"
#include "vlink/covering.hpp"
#include "vlink/errors.hpp"
#include "vlink/generate.hpp"
#include "vlink/invariants.hpp"
#include "vlink/orientation.hpp"
#include "vlink/realize.hpp"

using namespace vlink;

namespace {

ExtendedGaussCode t3() { return parse("O1+ U2+ O3+ U1+ O2+ U3+"); }
ExtendedGaussCode vt() { return parse("O1+ O2+ U1+ U2+"); }

}  // namespace

TEST_CASE("sign rotations of the classical trefoil trace five faces") {
    auto pieces = genus(t3(), sign_rotations(t3()));
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].vertices == 3);
    CHECK(pieces[0].edges == 6);
    CHECK(pieces[0].faces == 5);
    CHECK(pieces[0].genus == 0);
}

TEST_CASE("the virtualized family code is not classically planar") {
    auto pieces = genus(vt(), sign_rotations(vt()));
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].vertices == 2);
    CHECK(pieces[0].edges == 4);
    CHECK(pieces[0].faces == 2);
    CHECK(pieces[0].genus == 1);
}

TEST_CASE("a crossing-free circle has genus zero") {
    ExtendedGaussCode u0;
    u0.components.push_back({});
    Rotations none;
    auto pieces = genus(u0, none);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0] == PieceTopology{0, 0, 2, 0});
}

TEST_CASE("genus rejects incomplete rotations") {
    Rotations none;
    CHECK_THROWS_AS(genus(t3(), none), DomainError);
    CHECK_THROWS_AS(sign_rotations(parse("O1+ V1 U1+ V1")), DomainError);
}

TEST_CASE("realize the unknot") {
    ExtendedGaussCode u0;
    u0.components.push_back({});
    auto r = realize(u0, 0);
    CHECK(r.code == u0);
}

TEST_CASE("realize the trefoil") {
    auto r = realize(t3(), 0);
    CHECK(project_to_plain(r.code) == t3());
    for (const auto& piece : genus(r.code, r.rotations)) CHECK(piece.genus == 0);
}

TEST_CASE("realize the virtualized family code needs a virtual crossing") {
    auto r = realize(vt(), 0);
    CHECK(project_to_plain(r.code) == vt());
    CHECK(num_virtuals(r.code) >= 1);
    for (const auto& piece : genus(r.code, r.rotations)) CHECK(piece.genus == 0);
}

TEST_CASE("realize is deterministic per seed") {
    Rng rng(79);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 10; ++i) {
        auto plain = random_plain_code(rng, opts);
        auto a = realize(plain, 12345);
        auto b = realize(plain, 12345);
        CHECK(a.code == b.code);
        CHECK(a.rotations.ccw == b.rotations.ccw);
    }
}

TEST_CASE("realize round-trips and validates across seeds") {
    Rng rng(83);
    CodeGenOptions opts;
    opts.max_components = 3;
    opts.max_chords = 6;
    for (int i = 0; i < 25; ++i) {
        auto plain = random_plain_code(rng, opts);
        for (uint64_t s = 0; s < 3; ++s) {
            auto r = realize(plain, rng.derive());
            CHECK(project_to_plain(r.code) == plain);
            for (const auto& piece : genus(r.code, r.rotations)) CHECK(piece.genus == 0);
            CHECK(is_cut_system(canonical_cut_system(r.code)));
        }
    }
}

TEST_CASE("canonical cover vectors agree across realization seeds") {
    Rng rng(89);
    CodeGenOptions opts;
    opts.max_components = 2;
    opts.max_chords = 5;
    for (int i = 0; i < 10; ++i) {
        auto plain = random_plain_code(rng, opts);
        auto a = cover_invariant_vector(canonical_cover(realize(plain, rng.derive()).code));
        auto b = cover_invariant_vector(canonical_cover(realize(plain, rng.derive()).code));
        CHECK(a == b);
    }
}

TEST_CASE("svg output carries the layout tokens") {
    auto r = realize(vt(), 1);
    auto svg = layout_svg(r);
    CHECK(svg.find("<svg") != std::string::npos);
    size_t circles = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        circles++;
        pos++;
    }
    CHECK(circles == static_cast<size_t>(num_virtuals(r.code)));
    size_t lines = 0;
    pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        lines++;
        pos++;
    }
    // Four crossing legs per chord plus three segments per arc.
    CHECK(lines == 4u * num_chords(r.code) + 3u * 4u);
}
