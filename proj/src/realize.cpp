#include "vlink/realize.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "vlink/errors.hpp"
#include "vlink/rng.hpp"

namespace vlink {

namespace {

struct DartTable {
    // flat dart index = base[component] + 2*position + (end == Out)
    std::vector<int> base;
    int total = 0;

    explicit DartTable(const ExtendedGaussCode& code) {
        for (const auto& comp : code.components) {
            base.push_back(total);
            total += 2 * static_cast<int>(comp.size());
        }
    }
    int index(const PortRef& p) const {
        return base[p.component] + 2 * p.position + (p.end == PortEnd::Out ? 1 : 0);
    }
    int mate(const ExtendedGaussCode& code, int dart) const {
        // Out(c, p) pairs with In(c, p+1 mod m).
        int c = 0;
        while (c + 1 < static_cast<int>(base.size()) && base[c + 1] <= dart) c++;
        int rel = dart - base[c];
        int pos = rel / 2;
        int m = static_cast<int>(code.components[c].size());
        if (rel % 2 == 1) return base[c] + 2 * ((pos + 1) % m);
        return base[c] + 2 * ((pos - 1 + m) % m) + 1;
    }
};

}  // namespace

std::vector<PieceTopology> genus(const ExtendedGaussCode& code, const Rotations& rot) {
    require_valid(code);
    DartTable darts(code);

    // Vertex of each dart and the rotation as dart cycles.
    std::vector<int> vertex_of(darts.total, -1);
    std::vector<int> slot_of(darts.total, -1);
    std::vector<std::array<int, 4>> rotation;
    for (const auto& [key, ports] : rot.ccw) {
        (void)key;
        int v = static_cast<int>(rotation.size());
        std::array<int, 4> slots{};
        for (int s = 0; s < 4; ++s) {
            const PortRef& p = ports[s];
            if (p.component < 0 || p.component >= code.num_components() || p.position < 0 ||
                p.position >= static_cast<int>(code.components[p.component].size()))
                throw DomainError(Fault::MissingRotation, "rotation references a missing port");
            int d = darts.index(p);
            if (vertex_of[d] != -1)
                throw DomainError(Fault::MissingRotation, "port referenced twice in rotations");
            vertex_of[d] = v;
            slot_of[d] = s;
            slots[s] = d;
        }
        rotation.push_back(slots);
    }
    for (int d = 0; d < darts.total; ++d)
        if (vertex_of[d] == -1)
            throw DomainError(Fault::MissingRotation, "rotations do not cover all crossings");

    // Faces: orbits of dart -> next-ccw(mate(dart)).
    std::vector<int> face_of(darts.total, -1);
    int faces = 0;
    for (int d0 = 0; d0 < darts.total; ++d0) {
        if (face_of[d0] != -1) continue;
        int d = d0;
        while (face_of[d] == -1) {
            face_of[d] = faces;
            int m = darts.mate(code, d);
            d = rotation[vertex_of[m]][(slot_of[m] + 1) % 4];
        }
        faces++;
    }

    // Connected pieces over vertices.
    std::vector<int> uf(rotation.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int d = 0; d < darts.total; ++d) {
        int a = find(vertex_of[d]);
        int b = find(vertex_of[darts.mate(code, d)]);
        if (a != b) uf[a] = b;
    }

    std::map<int, int> piece_index;
    std::vector<PieceTopology> out;
    for (size_t v = 0; v < rotation.size(); ++v) {
        int root = find(static_cast<int>(v));
        auto [it, inserted] = piece_index.try_emplace(root, static_cast<int>(out.size()));
        if (inserted) out.push_back({});
        out[it->second].vertices++;
    }
    for (int d = 0; d < darts.total; ++d)
        if (d < darts.mate(code, d)) out[piece_index[find(vertex_of[d])]].edges++;
    std::vector<bool> face_seen(faces, false);
    for (int d = 0; d < darts.total; ++d) {
        if (face_seen[face_of[d]]) continue;
        face_seen[face_of[d]] = true;
        out[piece_index[find(vertex_of[d])]].faces++;
    }
    for (auto& piece : out) {
        int chi = piece.vertices - piece.edges + piece.faces;
        assert((2 - chi) % 2 == 0);
        piece.genus = (2 - chi) / 2;
    }

    // Crossing-free circles are their own planar pieces.
    for (const auto& comp : code.components)
        if (comp.empty()) out.push_back(PieceTopology{0, 0, 2, 0});
    return out;
}

Rotations sign_rotations(const ExtendedGaussCode& code) {
    require_valid(code);
    if (num_virtuals(code) > 0)
        throw DomainError(Fault::MissingRotation,
                          "sign rotations are defined for codes without virtual passages");
    Rotations rot;
    for (const auto& ch : chords_of(code)) {
        PortRef oo{ch.over.component, ch.over.position, PortEnd::Out};
        PortRef oi{ch.over.component, ch.over.position, PortEnd::In};
        PortRef uo{ch.under.component, ch.under.position, PortEnd::Out};
        PortRef ui{ch.under.component, ch.under.position, PortEnd::In};
        std::array<PortRef, 4> ccw = ch.sign > 0 ? std::array<PortRef, 4>{oo, uo, oi, ui}
                                                 : std::array<PortRef, 4>{oo, ui, oi, uo};
        rot.ccw[CrossingKey{Passage::Kind::Classical, ch.id}] = ccw;
    }
    return rot;
}

namespace {

struct Arc {
    int component = 0;
    int from_pos = 0;  // plain position whose out port starts the arc
    int x1 = 0;        // out-port x
    int x2 = 0;        // in-port x of the next passage
    int level = 0;
    int lo() const { return std::min(x1, x2); }
    int hi() const { return std::max(x1, x2); }
};

struct VirtualHit {
    int id = 0;
    int horizontal_arc = 0;
    int vertical_arc = 0;
    int x = 0;      // vertical position
    int level = 0;  // horizontal level
    bool on_up_segment = false;  // vertical at the arc's out port
};

}  // namespace

Realization realize(const PlainGaussCode& plain, uint64_t seed) {
    require_valid(plain);
    if (!is_plain(plain))
        throw DomainError(Fault::InvalidCode, "realize expects a plain code");

    const int n = num_chords(plain);
    const auto chords = chords_of(plain);
    Rng rng(seed);

    // Spine order and visit order of each chord.
    std::vector<int> spine(n, -1);
    std::vector<PassageRef> first_visit(n), second_visit(n);
    std::vector<bool> seen(n, false);
    int next_spine = 0;
    for (int c = 0; c < plain.num_components(); ++c)
        for (int p = 0; p < static_cast<int>(plain.components[c].size()); ++p) {
            int id = plain.components[c][p].id;
            if (!seen[id]) {
                seen[id] = true;
                spine[id] = next_spine++;
                first_visit[id] = {c, p};
            } else {
                second_visit[id] = {c, p};
            }
        }

    // Port x-coordinates. The crossing of chord x occupies ports 4s..4s+3;
    // the variant places v2's ports so the prescribed sign comes out.
    std::map<std::pair<int, int>, int> in_x, out_x;  // (component, plain pos) -> x
    std::vector<bool> variant_p(n, false);
    for (int x = 0; x < n; ++x) {
        int base = 4 * spine[x];
        bool over_first = chords[x].over == first_visit[x];
        bool vp = over_first == (chords[x].sign > 0);
        variant_p[x] = vp;
        auto v1 = std::make_pair(first_visit[x].component, first_visit[x].position);
        auto v2 = std::make_pair(second_visit[x].component, second_visit[x].position);
        in_x[v1] = base + 0;
        out_x[v1] = base + 2;
        if (vp) {
            out_x[v2] = base + 1;
            in_x[v2] = base + 3;
        } else {
            in_x[v2] = base + 1;
            out_x[v2] = base + 3;
        }
    }

    // Arcs between consecutive plain passages, one level each.
    std::vector<Arc> arcs;
    for (int c = 0; c < plain.num_components(); ++c) {
        const int m = static_cast<int>(plain.components[c].size());
        for (int p = 0; p < m; ++p) {
            Arc a;
            a.component = c;
            a.from_pos = p;
            a.x1 = out_x[{c, p}];
            a.x2 = in_x[{c, (p + 1) % m}];
            arcs.push_back(a);
        }
    }
    std::vector<int> levels(arcs.size());
    std::iota(levels.begin(), levels.end(), 1);
    rng.shuffle(levels);
    for (size_t a = 0; a < arcs.size(); ++a) arcs[a].level = levels[a];

    // Arc intersections: an endpoint of the higher arc strictly inside the
    // lower arc's span crosses its horizontal run.
    std::vector<VirtualHit> hits;
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t b = 0; b < arcs.size(); ++b) {
            if (arcs[a].level >= arcs[b].level) continue;  // a horizontal, b vertical
            for (int endpoint = 0; endpoint < 2; ++endpoint) {
                int x = endpoint == 0 ? arcs[b].x1 : arcs[b].x2;
                if (x > arcs[a].lo() && x < arcs[a].hi()) {
                    VirtualHit h;
                    h.id = static_cast<int>(hits.size());
                    h.horizontal_arc = static_cast<int>(a);
                    h.vertical_arc = static_cast<int>(b);
                    h.x = x;
                    h.level = arcs[a].level;
                    h.on_up_segment = endpoint == 0;
                    hits.push_back(h);
                }
            }
        }

    // Travel order of the hits along each arc: up its out vertical (level
    // ascending), across (by x in travel direction), down the in vertical
    // (level descending).
    std::vector<std::vector<int>> arc_hits(arcs.size());
    for (size_t a = 0; a < arcs.size(); ++a) {
        std::vector<int> up, across, down;
        for (const auto& h : hits) {
            if (h.vertical_arc == static_cast<int>(a)) {
                (h.on_up_segment ? up : down).push_back(h.id);
            } else if (h.horizontal_arc == static_cast<int>(a)) {
                across.push_back(h.id);
            }
        }
        std::sort(up.begin(), up.end(),
                  [&](int u, int v) { return hits[u].level < hits[v].level; });
        bool rightward = arcs[a].x1 < arcs[a].x2;
        std::sort(across.begin(), across.end(), [&](int u, int v) {
            return rightward ? hits[u].x < hits[v].x : hits[u].x > hits[v].x;
        });
        std::sort(down.begin(), down.end(),
                  [&](int u, int v) { return hits[u].level > hits[v].level; });
        auto& list = arc_hits[a];
        list.insert(list.end(), up.begin(), up.end());
        list.insert(list.end(), across.begin(), across.end());
        list.insert(list.end(), down.begin(), down.end());
    }

    // Assemble the extended code; remember extended positions.
    Realization out;
    out.code.components.resize(plain.components.size());
    std::map<std::pair<int, int>, int> ext_pos;      // plain (c, p) -> extended position
    std::vector<std::array<PassageRef, 2>> hit_pos(  // per hit: passage on [vertical, horizontal]
        hits.size());
    {
        int arc_index = 0;
        for (int c = 0; c < plain.num_components(); ++c) {
            const int m = static_cast<int>(plain.components[c].size());
            auto& comp = out.code.components[c];
            for (int p = 0; p < m; ++p) {
                ext_pos[{c, p}] = static_cast<int>(comp.size());
                comp.push_back(plain.components[c][p]);
                for (int hid : arc_hits[arc_index]) {
                    PassageRef ref{c, static_cast<int>(comp.size())};
                    comp.push_back(Passage::virt(hid));
                    bool vertical = hits[hid].vertical_arc == arc_index;
                    hit_pos[hid][vertical ? 0 : 1] = ref;
                }
                arc_index++;
            }
        }
    }

    // Rotations: classical crossings per variant, virtual crossings from
    // segment directions (angles: E=0, N=1, W=2, S=3).
    for (int x = 0; x < n; ++x) {
        PassageRef v1{first_visit[x].component, ext_pos[{first_visit[x].component,
                                                         first_visit[x].position}]};
        PassageRef v2{second_visit[x].component, ext_pos[{second_visit[x].component,
                                                          second_visit[x].position}]};
        PortRef v1i{v1.component, v1.position, PortEnd::In};
        PortRef v1o{v1.component, v1.position, PortEnd::Out};
        PortRef v2i{v2.component, v2.position, PortEnd::In};
        PortRef v2o{v2.component, v2.position, PortEnd::Out};
        std::array<PortRef, 4> ccw = variant_p[x] ? std::array<PortRef, 4>{v2i, v1o, v2o, v1i}
                                                  : std::array<PortRef, 4>{v2o, v1o, v2i, v1i};
        out.rotations.ccw[CrossingKey{Passage::Kind::Classical, x}] = ccw;
    }
    for (const auto& h : hits) {
        bool up = h.on_up_segment;
        bool rightward = arcs[h.horizontal_arc].x1 < arcs[h.horizontal_arc].x2;
        PortRef vi{hit_pos[h.id][0].component, hit_pos[h.id][0].position, PortEnd::In};
        PortRef vo{hit_pos[h.id][0].component, hit_pos[h.id][0].position, PortEnd::Out};
        PortRef hi{hit_pos[h.id][1].component, hit_pos[h.id][1].position, PortEnd::In};
        PortRef ho{hit_pos[h.id][1].component, hit_pos[h.id][1].position, PortEnd::Out};
        // Compass slots counterclockwise: E, N, W, S.
        std::array<PortRef, 4> ccw{};
        ccw[up ? 1 : 3] = vo;        // vertical out: N going up, S going down
        ccw[up ? 3 : 1] = vi;        // vertical in-back: opposite
        ccw[rightward ? 0 : 2] = ho; // horizontal out: E going right, W left
        ccw[rightward ? 2 : 0] = hi;
        out.rotations.ccw[CrossingKey{Passage::Kind::Virtual, h.id}] = ccw;
    }

    // Layout for rendering.
    using Kind = Realization::Segment::Kind;
    for (int x = 0; x < n; ++x) {
        double cx = 4.0 * spine[x] + 1.5, cy = -1.0;
        auto leg = [&](int port_x, bool over) {
            double px = port_x, py = 0.0;
            if (over) {
                out.segments.push_back({px, py, cx, cy, Kind::OverStrand});
            } else {
                // Leave a visual gap around the crossing point.
                double gx = cx + (px - cx) * 0.25, gy = cy + (py - cy) * 0.25;
                out.segments.push_back({px, py, gx, gy, Kind::UnderStrand});
            }
        };
        auto v1 = std::make_pair(first_visit[x].component, first_visit[x].position);
        auto v2 = std::make_pair(second_visit[x].component, second_visit[x].position);
        bool v1_over = chords[x].over == first_visit[x];
        leg(in_x[v1], v1_over);
        leg(out_x[v1], v1_over);
        leg(in_x[v2], !v1_over);
        leg(out_x[v2], !v1_over);
    }
    for (const auto& a : arcs) {
        double l = a.level;
        out.segments.push_back({double(a.x1), 0, double(a.x1), l, Kind::Arc});
        out.segments.push_back({double(a.x1), l, double(a.x2), l, Kind::Arc});
        out.segments.push_back({double(a.x2), l, double(a.x2), 0, Kind::Arc});
    }
    for (const auto& h : hits)
        out.virtual_points.push_back({double(h.x), double(h.level)});

    require_valid(out.code);
    for (const auto& piece : genus(out.code, out.rotations))
        if (piece.genus != 0)
            throw DomainError(Fault::InvalidCode, "realization failed the genus check");
    return out;
}

std::string layout_svg(const Realization& r) {
    double min_x = 0, max_x = 4, min_y = -2, max_y = 2;
    for (const auto& s : r.segments) {
        min_x = std::min({min_x, s.x1, s.x2});
        max_x = std::max({max_x, s.x1, s.x2});
        min_y = std::min({min_y, s.y1, s.y2});
        max_y = std::max({max_y, s.y1, s.y2});
    }
    const double scale = 24.0, pad = 24.0;
    auto sx = [&](double x) { return pad + (x - min_x) * scale; };
    auto sy = [&](double y) { return pad + (max_y - y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << (2 * pad + (max_x - min_x) * scale) << "\" height=\""
        << (2 * pad + (max_y - min_y) * scale) << "\">\n";
    for (const auto& s : r.segments) {
        const char* color =
            s.kind == Realization::Segment::Kind::Arc
                ? "#336699"
                : (s.kind == Realization::Segment::Kind::OverStrand ? "#222222" : "#888888");
        svg << "  <line x1=\"" << sx(s.x1) << "\" y1=\"" << sy(s.y1) << "\" x2=\"" << sx(s.x2)
            << "\" y2=\"" << sy(s.y2) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : r.virtual_points)
        svg << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1])
            << "\" r=\"5\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace vlink
