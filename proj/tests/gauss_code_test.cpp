#include <doctest.h>

#include "vlink/codec.hpp"
#include "vlink/errors.hpp"
#include "vlink/gauss_code.hpp"
#include "vlink/generate.hpp"

using namespace vlink;

namespace {

ExtendedGaussCode vt() { return parse("O1+ O2+ U1+ U2+\n"); }
ExtendedGaussCode t3() { return parse("O1+ U2+ O3+ U1+ O2+ U3+\n"); }

}  // namespace

TEST_CASE("validate accepts the empty unknot") {
    ExtendedGaussCode u0;
    u0.components.push_back({});
    CHECK(validate(u0).empty());
}

TEST_CASE("validate reports a chord appearing once") {
    ExtendedGaussCode code;
    code.components.push_back({Passage::classical(0, Role::Over, +1)});
    auto v = validate(code);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "chord 0 has 1 occurrence");
}

TEST_CASE("validate reports mismatched signs") {
    ExtendedGaussCode code;
    code.components.push_back(
        {Passage::classical(0, Role::Over, +1), Passage::classical(0, Role::Under, -1)});
    auto v = validate(code);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "chord 0 has mismatched signs");
}

TEST_CASE("validate reports a missing over/under pairing") {
    ExtendedGaussCode code;
    code.components.push_back(
        {Passage::classical(0, Role::Over, +1), Passage::classical(0, Role::Over, +1)});
    auto v = validate(code);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "chord 0 lacks one over and one under passage");
}

TEST_CASE("validate checks cut point slots") {
    ExtendedGaussCode code = vt();
    code.add_cut(Slot{0, 4});
    CHECK(!validate(code).empty());
}

TEST_CASE("project_to_plain deletes virtual passages and cut points") {
    auto vtx = parse("O1+ O2+ V1 # U1+ U2+ V1 #\n");
    auto plain = project_to_plain(vtx);
    CHECK(serialize(plain) == "O1+ O2+ U1+ U2+\n");

    auto t = t3();
    CHECK(project_to_plain(t) == t);

    ExtendedGaussCode u0;
    u0.components.push_back({});
    u0.add_cut(Slot{0, 0}, 2);
    auto p = project_to_plain(u0);
    CHECK(p.components.size() == 1);
    CHECK(p.components[0].empty());
    CHECK(!p.has_cuts());
}

TEST_CASE("project_to_plain is idempotent") {
    Rng rng(7);
    CodeGenOptions opts;
    for (int i = 0; i < 20; ++i) {
        auto d = random_diagram(rng, opts);
        auto once = project_to_plain(d);
        CHECK(project_to_plain(once) == once);
    }
}

TEST_CASE("classify_crossings") {
    auto t = t3();
    for (const auto& [id, cls] : classify_crossings(t)) CHECK(cls.self());

    auto el = parse("O1+\nU1+\n");
    auto cls = classify_crossings(el);
    CHECK(!cls[0].self());
    CHECK(cls[0].over_component == 0);
    CHECK(cls[0].under_component == 1);

    auto el2 = parse("O1+ O2+\nU1+ U2+\n");
    for (const auto& [id, c] : classify_crossings(el2)) {
        CHECK(!c.self());
        CHECK(c.over_component == 0);
    }
}

TEST_CASE("is_even") {
    CHECK(is_even(t3()).even);  // any knot code is even
    auto vhl = parse("O1+ V1\nU1+ V1\n");
    auto e = is_even(vhl);
    CHECK(!e.component_even[0]);
    CHECK(!e.even);
    CHECK(is_even(parse("O1+ O2+\nU1+ U2+\n")).even);
}

TEST_CASE("mirror_switch") {
    auto v = vt();
    CHECK(serialize(mirror_switch(v, MirrorMode::SwitchAll)) == "U1- U2- O1- O2-\n");
    CHECK(serialize(mirror_switch(v, MirrorMode::Reflect)) == "O1- O2- U1- U2-\n");

    ExtendedGaussCode u0;
    u0.components.push_back({});
    CHECK(mirror_switch(u0, MirrorMode::SwitchAll) == u0);
    CHECK(mirror_switch(u0, MirrorMode::Reflect) == u0);
}

TEST_CASE("mirror_switch is an involution") {
    Rng rng(11);
    CodeGenOptions opts;
    for (int i = 0; i < 20; ++i) {
        auto d = random_diagram(rng, opts);
        CHECK(mirror_switch(mirror_switch(d, MirrorMode::SwitchAll), MirrorMode::SwitchAll) == d);
        CHECK(mirror_switch(mirror_switch(d, MirrorMode::Reflect), MirrorMode::Reflect) == d);
    }
}

TEST_CASE("passage counts equal twice the chord count") {
    Rng rng(13);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 30; ++i) {
        auto d = random_diagram(rng, opts);
        int passages = 0;
        for (const auto& comp : d.components)
            for (const auto& p : comp)
                if (p.is_classical()) passages++;
        CHECK(passages == 2 * num_chords(d));
    }
}

TEST_CASE("is_even depends only on the plain projection") {
    Rng rng(17);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 20; ++i) {
        auto d = random_diagram(rng, opts);
        auto a = is_even(d);
        auto b = is_even(project_to_plain(d));
        CHECK(a.even == b.even);
        CHECK(a.component_even == b.component_even);
    }
}
