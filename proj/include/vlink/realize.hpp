#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vlink/gauss_code.hpp"

namespace vlink {

enum class PortEnd : uint8_t { In, Out };

// One end of a traversal arc at a crossing: the In end of extended position
// p receives the arc from position p-1, the Out end starts the arc to p+1.
struct PortRef {
    int component = 0;
    int position = 0;
    PortEnd end = PortEnd::In;
    auto operator<=>(const PortRef&) const = default;
};

struct CrossingKey {
    Passage::Kind kind = Passage::Kind::Classical;
    int id = 0;
    auto operator<=>(const CrossingKey&) const = default;
};

// Counterclockwise cyclic order of the four arc ends at each crossing. At a
// positive classical crossing the order is (over-out, under-out, over-in,
// under-in); a negative crossing is its reflection. Virtual crossings
// interleave the two strands.
struct Rotations {
    std::map<CrossingKey, std::array<PortRef, 4>> ccw;
};

struct PieceTopology {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int genus = 0;
    bool operator==(const PieceTopology&) const = default;
};

// Euler characteristic per connected 4-valent piece via face tracing;
// crossing-free circles report {0, 0, 2, 0}.
std::vector<PieceTopology> genus(const ExtendedGaussCode& code, const Rotations& rot);

// Rotations forced by crossing signs; defined for codes without virtual
// passages.
Rotations sign_rotations(const ExtendedGaussCode& code);

struct Realization {
    ExtendedGaussCode code;
    Rotations rotations;

    // Routed layout: classical crossings sit on a spine in first-occurrence
    // order, arcs run on distinct horizontal levels above it, and arc
    // intersections are the virtual crossings.
    struct Segment {
        double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
        enum class Kind : uint8_t { Arc, OverStrand, UnderStrand } kind = Kind::Arc;
    };
    std::vector<Segment> segments;
    std::vector<std::array<double, 2>> virtual_points;
};

// Deterministic planar realization of a plain code: the output projects
// back to the input and every connected piece has genus zero. Different
// seeds may route arcs differently (the detour scramble).
Realization realize(const PlainGaussCode& plain, uint64_t seed);

std::string layout_svg(const Realization& r);

}  // namespace vlink
