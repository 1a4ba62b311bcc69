#include <doctest.h>

#include <algorithm>

#include "vlink/codec.hpp"
#include "vlink/errors.hpp"
#include "vlink/generate.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/orientation.hpp"
#include "vlink/realize.hpp"

using namespace vlink;

namespace {

ExtendedGaussCode t3() { return parse("O1+ U2+ O3+ U1+ O2+ U3+"); }
ExtendedGaussCode vtx() { return parse("O1+ O2+ V1 # U1+ U2+ V1 #"); }

int count_kind(const std::vector<MoveInstance>& moves, MoveKind k) {
    return static_cast<int>(std::count_if(moves.begin(), moves.end(),
                                          [&](const MoveInstance& m) { return m.kind == k; }));
}

MoveInstance first_kind(const std::vector<MoveInstance>& moves, MoveKind k) {
    for (const auto& m : moves)
        if (m.kind == k) return m;
    throw std::runtime_error("no such kind");
}

}  // namespace

TEST_CASE("a kinked unknot admits R1-") {
    auto kink = parse("O1+ U1+");
    auto moves = enumerate_moves(kink);
    CHECK(count_kind(moves, MoveKind::R1Remove) >= 1);
    auto after = apply_move(kink, first_kind(moves, MoveKind::R1Remove));
    CHECK(after.num_components() == 1);
    CHECK(after.components[0].empty());
}

TEST_CASE("the trefoil admits no R1- or R2-") {
    auto moves = enumerate_moves(t3());
    CHECK(count_kind(moves, MoveKind::R1Remove) == 0);
    CHECK(count_kind(moves, MoveKind::R2Remove) == 0);
    CHECK(count_kind(moves, MoveKind::R3) == 0);  // alternating diagram
}

TEST_CASE("canonical cuts sit next to their virtual passages") {
    auto moves = enumerate_moves(vtx());
    CHECK(count_kind(moves, MoveKind::CP1) == 2);
    CHECK(count_kind(moves, MoveKind::R1Add) == 0);  // R moves need an empty cut set
}

TEST_CASE("R2+ then R2- round-trips the f polynomial") {
    Rng rng(97);
    auto d = t3();
    auto f0 = f_polynomial(d);
    auto moves = enumerate_moves(d);
    auto add = first_kind(moves, MoveKind::R2Add);
    add.seed = rng.derive();
    auto bigger = apply_move(d, add);
    CHECK(num_chords(bigger) == 5);
    CHECK(f_polynomial(bigger) == f0);
    auto removable = enumerate_moves(bigger);
    CHECK(count_kind(removable, MoveKind::R2Remove) >= 1);
    auto rem = first_kind(removable, MoveKind::R2Remove);
    rem.seed = rng.derive();
    auto back = apply_move(bigger, rem);
    CHECK(f_polynomial(back) == f0);
}

TEST_CASE("an explicit R3 triangle applies and preserves the bracket") {
    auto code = parse("O1+ O2+ U1+ O3+ U2+ U3+");
    auto moves = enumerate_moves(code);
    REQUIRE(count_kind(moves, MoveKind::R3) >= 1);
    auto r3 = first_kind(moves, MoveKind::R3);
    auto f0 = f_polynomial(code);
    auto after = apply_move(code, r3);
    CHECK(f_polynomial(after) == f0);
    // phi_0 is taken on honest diagrams, so realize the abstract pattern.
    auto realized = realize(code, 5).code;
    CHECK(cover_invariant_vector(canonical_cover(after)) ==
          cover_invariant_vector(canonical_cover(realized)));
}

TEST_CASE("R3 with inadmissible signs is not enumerated") {
    auto code = parse("O1- O2+ U1- O3+ U2+ U3+");
    auto moves = enumerate_moves(code);
    CHECK(count_kind(moves, MoveKind::R3) == 0);
}

TEST_CASE("CP2 insert then remove is the identity") {
    auto base = vtx();
    MoveInstance add;
    add.kind = MoveKind::CP2Add;
    add.component = 0;
    add.slot = 1;
    auto more = apply_move(base, add);
    CHECK(more.cut_count() == 4);
    MoveInstance rem = add;
    rem.kind = MoveKind::CP2Remove;
    CHECK(apply_move(more, rem) == base);
}

TEST_CASE("CP1 keeps the cut system") {
    auto moves = enumerate_moves(vtx());
    auto slide = first_kind(moves, MoveKind::CP1);
    auto after = apply_move(vtx(), slide);
    CHECK(is_cut_system(after));
    CHECK(after.cut_count() == 2);
}

TEST_CASE("CP3 changes per-component cut counts by the documented amounts") {
    // Self crossing: all four points land on one component.
    auto knot = vtx();
    MoveInstance quad;
    quad.kind = MoveKind::CP3Add;
    quad.chord = 0;
    auto more = apply_move(knot, quad);
    CHECK(more.cut_count_on(0) == knot.cut_count_on(0) + 4);
    MoveInstance undo = quad;
    undo.kind = MoveKind::CP3Remove;
    CHECK(apply_move(more, undo) == knot);

    // Nonself crossing: two points per component.
    auto link = parse("O1+ O2+\nU1+ U2+");
    REQUIRE(is_cut_system(link));
    auto bigger = apply_move(link, quad);
    CHECK(bigger.cut_count_on(0) == 2);
    CHECK(bigger.cut_count_on(1) == 2);
    CHECK(is_cut_system(bigger));
}

TEST_CASE("apply rejects stale or misplaced instances") {
    MoveInstance bogus;
    bogus.kind = MoveKind::R1Remove;
    bogus.chord = 0;
    bogus.component = 0;
    bogus.slot = 0;
    CHECK_THROWS_AS(apply_move(t3(), bogus), DomainError);

    MoveInstance detour;
    detour.kind = MoveKind::Detour;
    CHECK_THROWS_AS(apply_move(vtx(), detour), DomainError);  // cut set not empty

    MoveInstance rem;
    rem.kind = MoveKind::CP2Remove;
    rem.component = 0;
    rem.slot = 0;
    CHECK_THROWS_AS(apply_move(t3(), rem), DomainError);
}

TEST_CASE("walks are deterministic and length zero is the identity") {
    auto d = t3();
    CHECK(random_walk(d, 0, 99).code == d);
    auto a = random_walk(d, 10, 4242);
    auto b = random_walk(d, 10, 4242);
    CHECK(a.code == b.code);
    CHECK(a.trace.size() == b.trace.size());
}

TEST_CASE("R walks preserve evenness and the f polynomial") {
    Rng rng(101);
    CodeGenOptions opts;
    opts.max_components = 2;
    opts.max_chords = 4;
    for (int i = 0; i < 10; ++i) {
        auto d = random_diagram(rng, opts);
        auto f0 = f_polynomial(d);
        auto parity0 = is_even(d).component_even;
        auto walked = random_walk(d, 12, rng.derive());
        CHECK(f_polynomial(walked.code) == f0);
        CHECK(is_even(walked.code).component_even == parity0);
    }
}

TEST_CASE("cut walks never touch the underlying diagram") {
    Rng rng(103);
    CodeGenOptions opts;
    opts.max_components = 2;
    for (int i = 0; i < 10; ++i) {
        auto dp = scramble_cut_system(rng, random_diagram(rng, opts), 0);
        WalkOptions wopts;
        wopts.cut_moves = true;
        auto walked = random_walk(dp, 10, rng.derive(), wopts);
        CHECK(project_to_plain(walked.code) == project_to_plain(dp));
        ExtendedGaussCode stripped_a = walked.code, stripped_b = dp;
        stripped_a.cut_points.clear();
        stripped_b.cut_points.clear();
        CHECK(stripped_a == stripped_b);
    }
}

TEST_CASE("walks on a code with cut points skip R moves without failing") {
    auto res = random_walk(vtx(), 5, 7);  // cut_moves = false
    CHECK(res.code == vtx());
    CHECK(res.trace.empty());
}
