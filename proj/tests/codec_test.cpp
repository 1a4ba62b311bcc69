#include <doctest.h>

#include "vlink/codec.hpp"
#include "vlink/errors.hpp"
#include "vlink/generate.hpp"
#include "vlink/invariants.hpp"

using namespace vlink;

TEST_CASE("parse places inline cut points") {
    auto vtx = parse("O1+ O2+ V1 # U1+ U2+ V1 #");
    CHECK(vtx.num_components() == 1);
    CHECK(num_chords(vtx) == 2);
    CHECK(num_virtuals(vtx) == 1);
    CHECK(vtx.cut_count() == 2);
    CHECK(vtx.cuts_in_slot(Slot{0, 2}) == 1);
    CHECK(vtx.cuts_in_slot(Slot{0, 5}) == 1);
}

TEST_CASE("parse reads the empty component") {
    auto u0 = parse("()\n");
    CHECK(u0.num_components() == 1);
    CHECK(u0.components[0].empty());
}

TEST_CASE("parse rejects a missing sign with position info") {
    try {
        parse("O1+ U1");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("parse rejects a leading cut point") {
    CHECK_THROWS_AS(parse("# O1+ U1+"), SyntaxError);
}

TEST_CASE("parse rejects unknown tokens and bad pairings") {
    CHECK_THROWS_AS(parse("X1+"), SyntaxError);
    CHECK_THROWS_AS(parse("O1+"), DomainError);         // chord appears once
    CHECK_THROWS_AS(parse("O1+ U1-"), DomainError);     // sign mismatch
    CHECK_THROWS_AS(parse("O1+ O1+"), DomainError);     // two overs
    CHECK_THROWS_AS(parse("V1 O1+ U1+"), DomainError);  // virtual appears once
}

TEST_CASE("serialize canonical forms") {
    ExtendedGaussCode u0;
    u0.components.push_back({});
    CHECK(serialize(u0) == "()\n");
    CHECK(serialize(parse("O1+ O2+ V1 # U1+ U2+ V1 #")) == "O1+ O2+ V1 # U1+ U2+ V1 #\n");
    CHECK(serialize(parse("O1+ U2+ O3+ U1+ O2+ U3+")) == "O1+ U2+ O3+ U1+ O2+ U3+\n");
}

TEST_CASE("serialize renumbers identifiers by first occurrence") {
    CHECK(serialize(parse("Ux+ Oy- Ox+ Uy-")) == "U1+ O2- O1+ U2-\n");
}

TEST_CASE("parse then serialize round-trips on random codes") {
    Rng rng(23);
    CodeGenOptions opts;
    opts.max_components = 3;
    for (int i = 0; i < 40; ++i) {
        auto d = scramble_cut_system(rng, random_diagram(rng, opts), 5);
        auto text = serialize(d);
        CHECK(serialize(parse(text)) == text);
    }
}

TEST_CASE("serialize rejects cut points on crossing-free components") {
    ExtendedGaussCode code;
    code.components.push_back({});
    code.add_cut(Slot{0, 0}, 2);
    CHECK(validate(code).empty());  // representable in memory
    CHECK_THROWS_AS(serialize(code), DomainError);
}

TEST_CASE("doubled values render as integers or half fractions") {
    CHECK(format_doubled(3) == "3/2");
    CHECK(format_doubled(-3) == "-3/2");
    CHECK(format_doubled(4) == "2");
    CHECK(format_doubled(0) == "0");
    CHECK(format_doubled(-1) == "-1/2");
}

TEST_CASE("emit_report basic shape") {
    ExtendedGaussCode u0;
    u0.components.push_back({});
    auto text = emit_report(compute_report(u0));
    CHECK(text.find("\"normal\": true") != std::string::npos);
    CHECK(text.find("\"odd_writhe\": 0") != std::string::npos);
    CHECK(text.find("\"f_polynomial\": \"1\"") != std::string::npos);
}

TEST_CASE("emit_report on the virtualized family fixture") {
    auto rep = compute_report(parse("O1+ O2+ V1 # U1+ U2+ V1 #"));
    CHECK(rep.even);
    CHECK(!rep.normal);
    CHECK(rep.odd_writhe.has_value());
    CHECK(*rep.odd_writhe == 2);
    CHECK(rep.lk_n.has_value());
    CHECK(*rep.lk_n == 2);
    auto text = emit_report(rep);
    CHECK(text.find("\"lk_N\": 2") != std::string::npos);
}

TEST_CASE("report on the plain virtualized family code") {
    auto rep = compute_report(parse("O1+ O2+ U1+ U2+"));
    CHECK(rep.even);
    CHECK(!rep.normal);
    // No virtual passages, so the canonical cut system is empty and cannot
    // repair the diagram: no cover section.
    CHECK(!rep.cut_system);
    CHECK(!rep.cover.has_value());
    CHECK(!rep.lk_n.has_value());
}

TEST_CASE("emit_report renders half-integer linking") {
    auto rep = compute_report(parse("O1+ V1\nU1+ V1"));
    CHECK(rep.linking2.at({0, 1}) == 1);
    auto text = emit_report(rep);
    CHECK(text.find("\"1,2\": \"1/2\"") != std::string::npos);
}

TEST_CASE("reports survive inline cut sets that are not cut systems") {
    auto rep = compute_report(parse("O1+ # O2+ U1+ U2+"));
    CHECK(!rep.cut_system);
    CHECK(!rep.cover.has_value());
    CHECK(!rep.lk_n.has_value());
    CHECK(rep.odd_writhe.has_value());  // base invariants still present
}
