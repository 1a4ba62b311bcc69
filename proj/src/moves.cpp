#include "vlink/moves.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "vlink/errors.hpp"
#include "vlink/realize.hpp"
#include "vlink/rng.hpp"

namespace vlink {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Add: return "R1+";
        case MoveKind::R1Remove: return "R1-";
        case MoveKind::R2Add: return "R2+";
        case MoveKind::R2Remove: return "R2-";
        case MoveKind::R3: return "R3";
        case MoveKind::Detour: return "Detour";
        case MoveKind::CP1: return "CP1";
        case MoveKind::CP2Add: return "CP2+";
        case MoveKind::CP2Remove: return "CP2-";
        case MoveKind::CP3Add: return "CP3+";
        case MoveKind::CP3Remove: return "CP3-";
    }
    return "?";
}

std::string MoveInstance::describe() const {
    std::ostringstream out;
    out << move_kind_name(kind);
    if (chord >= 0) out << " chord=" << chord;
    if (chord2 >= 0) out << "," << chord2;
    if (chord3 >= 0) out << "," << chord3;
    if (component >= 0) out << " @(" << component << "," << slot << ")";
    if (component2 >= 0) out << " (" << component2 << "," << slot2 << ")";
    if (component3 >= 0) out << " (" << component3 << "," << slot3 << ")";
    return out.str();
}

namespace {

// Gaps between consecutive classical passages of the plain projection.
struct Gap {
    int component = 0;
    int index = 0;      // gap after plain position `index`
    int first = 0;      // plain position
    int second = 0;     // plain position (cyclic successor)
};

std::vector<Gap> plain_gaps(const PlainGaussCode& plain) {
    std::vector<Gap> gaps;
    for (int c = 0; c < plain.num_components(); ++c) {
        const int m = static_cast<int>(plain.components[c].size());
        for (int g = 0; g < m; ++g) gaps.push_back(Gap{c, g, g, (g + 1) % m});
        // A 2-passage component yields both sides of the same pair, which
        // are genuinely different arcs.
    }
    return gaps;
}

const Passage& at(const PlainGaussCode& plain, int c, int p) { return plain.components[c][p]; }

// Model triangle for the R3 sign condition: vertices TM=(0,0), TB=(2,0),
// MB=(1,1); each strand's direction follows its pair order, and the three
// crossing signs must match the embedded picture up to a global mirror.
struct R3Shape {
    int sx = 0, sy = 0, sz = 0;
};

R3Shape r3_model_signs(bool tx, bool mx, bool by) {
    auto det = [](int ax, int ay, int bx, int by2) { return ax * by2 - ay * bx; };
    int tdx = tx ? 1 : -1, tdy = 0;
    int mdx = mx ? 1 : -1, mdy = mx ? 1 : -1;
    int bdx = by ? -1 : 1, bdy = by ? 1 : -1;
    R3Shape s;
    s.sx = det(tdx, tdy, mdx, mdy) > 0 ? +1 : -1;
    s.sy = det(tdx, tdy, bdx, bdy) > 0 ? +1 : -1;
    s.sz = det(mdx, mdy, bdx, bdy) > 0 ? +1 : -1;
    return s;
}

bool r3_signs_admissible(const PlainGaussCode& plain, int x, int y, int z, bool tx, bool mx,
                         bool by) {
    auto chords = chords_of(plain);
    R3Shape s = r3_model_signs(tx, mx, by);
    int ax = chords[x].sign, ay = chords[y].sign, az = chords[z].sign;
    return (ax == s.sx && ay == s.sy && az == s.sz) ||
           (ax == -s.sx && ay == -s.sy && az == -s.sz);
}

// Plain insertion: splice `extra` into component c right after plain
// position `slot` (index 0 for an empty component).
void insert_at_gap(PlainGaussCode& plain, int c, int slot, const std::vector<Passage>& extra) {
    auto& comp = plain.components[c];
    int where = comp.empty() ? 0 : slot + 1;
    comp.insert(comp.begin() + where, extra.begin(), extra.end());
}

ExtendedGaussCode rerealize(const PlainGaussCode& plain, uint64_t seed) {
    return realize(normalize_ids(plain), seed).code;
}

void require_cut_free(const ExtendedGaussCode& code) {
    if (code.has_cuts())
        throw DomainError(Fault::NotApplicable, "R moves need an empty cut set");
}

std::vector<Slot> cp3_slots(const ExtendedGaussCode& code, int chord_id) {
    auto chords = chords_of(code);
    if (chord_id < 0 || chord_id >= static_cast<int>(chords.size()))
        throw DomainError(Fault::NotApplicable, "no such chord");
    const auto& ch = chords[chord_id];
    std::vector<Slot> slots;
    for (const auto& ref : {ch.over, ch.under}) {
        int m = static_cast<int>(code.components[ref.component].size());
        slots.push_back(Slot{ref.component, (ref.position - 1 + m) % m});
        slots.push_back(Slot{ref.component, ref.position});
    }
    return slots;
}

}  // namespace

std::vector<MoveInstance> enumerate_moves(const ExtendedGaussCode& code) {
    require_valid(code);
    std::vector<MoveInstance> out;
    const bool cut_free = !code.has_cuts();
    const PlainGaussCode plain = project_to_plain(code);
    const auto chords = chords_of(plain);
    const auto gaps = plain_gaps(plain);
    const int n = static_cast<int>(chords.size());

    if (cut_free) {
        // R1-: a chord with adjacent endpoints.
        for (const auto& g : gaps) {
            const auto& p1 = at(plain, g.component, g.first);
            const auto& p2 = at(plain, g.component, g.second);
            if (p1.id == p2.id && g.first != g.second) {
                MoveInstance mi;
                mi.kind = MoveKind::R1Remove;
                mi.chord = p1.id;
                mi.component = g.component;
                mi.slot = g.index;
                out.push_back(mi);
            }
        }

        // R2-: an over-over gap and an under-under gap of the same two
        // chords with opposite signs.
        for (const auto& go : gaps) {
            const auto& a = at(plain, go.component, go.first);
            const auto& b = at(plain, go.component, go.second);
            if (a.role != Role::Over || b.role != Role::Over || a.id == b.id) continue;
            if (a.sign != -b.sign) continue;
            for (const auto& gu : gaps) {
                const auto& c = at(plain, gu.component, gu.first);
                const auto& d = at(plain, gu.component, gu.second);
                if (c.role != Role::Under || d.role != Role::Under) continue;
                if (!((c.id == a.id && d.id == b.id) || (c.id == b.id && d.id == a.id))) continue;
                MoveInstance mi;
                mi.kind = MoveKind::R2Remove;
                mi.chord = a.id;
                mi.chord2 = b.id;
                mi.component = go.component;
                mi.slot = go.index;
                mi.component2 = gu.component;
                mi.slot2 = gu.index;
                out.push_back(mi);
            }
        }

        // R3: top gap (over,over), middle gap (under of a top chord, over
        // of the third), bottom gap (the two remaining unders), with the
        // model sign condition.
        for (const auto& gt : gaps) {
            const auto& t1 = at(plain, gt.component, gt.first);
            const auto& t2 = at(plain, gt.component, gt.second);
            if (t1.role != Role::Over || t2.role != Role::Over || t1.id == t2.id) continue;
            for (const auto& gm : gaps) {
                const auto& m1 = at(plain, gm.component, gm.first);
                const auto& m2 = at(plain, gm.component, gm.second);
                // One passage is the under of x in {t1,t2}; the other is the
                // over of a new chord z.
                for (int which = 0; which < 2; ++which) {
                    const auto& ux = which == 0 ? m1 : m2;
                    const auto& oz = which == 0 ? m2 : m1;
                    if (ux.role != Role::Under || oz.role != Role::Over) continue;
                    if (ux.id != t1.id && ux.id != t2.id) continue;
                    if (oz.id == t1.id || oz.id == t2.id) continue;
                    int x = ux.id;
                    int y = x == t1.id ? t2.id : t1.id;
                    int z = oz.id;
                    for (const auto& gb : gaps) {
                        const auto& b1 = at(plain, gb.component, gb.first);
                        const auto& b2 = at(plain, gb.component, gb.second);
                        if (b1.role != Role::Under || b2.role != Role::Under) continue;
                        if (!((b1.id == y && b2.id == z) || (b1.id == z && b2.id == y))) continue;
                        bool tx = t1.id == x;           // x first on the top strand
                        bool mx = which == 0;           // x's under first on the middle strand
                        bool by = b1.id == y;           // y's under first on the bottom strand
                        if (!r3_signs_admissible(plain, x, y, z, tx, mx, by)) continue;
                        MoveInstance mi;
                        mi.kind = MoveKind::R3;
                        mi.chord = x;
                        mi.chord2 = y;
                        mi.chord3 = z;
                        mi.component = gt.component;
                        mi.slot = gt.index;
                        mi.component2 = gm.component;
                        mi.slot2 = gm.index;
                        mi.component3 = gb.component;
                        mi.slot3 = gb.index;
                        out.push_back(mi);
                    }
                }
            }
        }

        // R1+ at any plain gap, both kink orders and both signs.
        for (int c = 0; c < plain.num_components(); ++c) {
            int nslots = plain.components[c].empty()
                             ? 1
                             : static_cast<int>(plain.components[c].size());
            for (int s = 0; s < nslots; ++s)
                for (int sign : {+1, -1})
                    for (bool over_first : {false, true}) {
                        MoveInstance mi;
                        mi.kind = MoveKind::R1Add;
                        mi.component = c;
                        mi.slot = s;
                        mi.sign = sign;
                        mi.flag = over_first;
                        out.push_back(mi);
                    }
        }

        // R2+ at any pair of plain gaps (same gap allowed: the nested poke).
        for (int c1 = 0; c1 < plain.num_components(); ++c1) {
            int s1max = plain.components[c1].empty()
                            ? 1
                            : static_cast<int>(plain.components[c1].size());
            for (int s1 = 0; s1 < s1max; ++s1)
                for (int c2 = 0; c2 < plain.num_components(); ++c2) {
                    int s2max = plain.components[c2].empty()
                                    ? 1
                                    : static_cast<int>(plain.components[c2].size());
                    for (int s2 = 0; s2 < s2max; ++s2)
                        for (int sign : {+1, -1})
                            for (bool parallel : {false, true}) {
                                if (c1 == c2 && s1 == s2 && parallel) continue;
                                MoveInstance mi;
                                mi.kind = MoveKind::R2Add;
                                mi.component = c1;
                                mi.slot = s1;
                                mi.component2 = c2;
                                mi.slot2 = s2;
                                mi.sign = sign;
                                mi.flag = parallel;
                                out.push_back(mi);
                            }
                }
        }

        MoveInstance detour;
        detour.kind = MoveKind::Detour;
        out.push_back(detour);
    }

    // CP1: a cut point next to a virtual passage on its strand.
    for (int c = 0; c < code.num_components(); ++c) {
        const auto& comp = code.components[c];
        const int m = static_cast<int>(comp.size());
        for (int v = 0; v < m; ++v) {
            if (comp[v].is_classical()) continue;
            int before = (v - 1 + m) % m;
            if (code.cuts_in_slot(Slot{c, before}) > 0) {
                MoveInstance mi;
                mi.kind = MoveKind::CP1;
                mi.component = c;
                mi.slot = before;
                mi.slot2 = v;
                out.push_back(mi);
            }
            if (code.cuts_in_slot(Slot{c, v}) > 0) {
                MoveInstance mi;
                mi.kind = MoveKind::CP1;
                mi.component = c;
                mi.slot = v;
                mi.slot2 = before;
                out.push_back(mi);
            }
        }
    }

    // CP2 insertions everywhere (representable slots only), removals where
    // a slot holds a pair.
    for (int c = 0; c < code.num_components(); ++c) {
        if (code.components[c].empty()) continue;
        for (int s = 0; s < code.slot_count(c); ++s) {
            MoveInstance mi;
            mi.kind = MoveKind::CP2Add;
            mi.component = c;
            mi.slot = s;
            out.push_back(mi);
            if (code.cuts_in_slot(Slot{c, s}) >= 2) {
                mi.kind = MoveKind::CP2Remove;
                out.push_back(mi);
            }
        }
    }

    // CP3 around every classical crossing; removal needs the four flanking
    // cut points present.
    for (int x = 0; x < n; ++x) {
        MoveInstance mi;
        mi.kind = MoveKind::CP3Add;
        mi.chord = x;
        out.push_back(mi);

        auto slots = cp3_slots(code, x);
        std::map<Slot, int> needed;
        for (const auto& s : slots) needed[s]++;
        bool ok = true;
        for (const auto& [s, k] : needed)
            if (code.cuts_in_slot(s) < k) ok = false;
        if (ok) {
            mi.kind = MoveKind::CP3Remove;
            out.push_back(mi);
        }
    }

    return out;
}

ExtendedGaussCode apply_move(const ExtendedGaussCode& code, const MoveInstance& move) {
    require_valid(code);
    const PlainGaussCode plain = project_to_plain(code);
    const auto chords = chords_of(plain);
    const int n = static_cast<int>(chords.size());

    auto plain_gap_pair = [&](int c, int g) -> std::pair<int, int> {
        int m = static_cast<int>(plain.components[c].size());
        if (m == 0 || g < 0 || g >= m)
            throw DomainError(Fault::NotApplicable, "bad gap");
        return {g, (g + 1) % m};
    };

    switch (move.kind) {
        case MoveKind::R1Remove: {
            require_cut_free(code);
            auto [a, b] = plain_gap_pair(move.component, move.slot);
            const auto& p1 = at(plain, move.component, a);
            const auto& p2 = at(plain, move.component, b);
            if (p1.id != move.chord || p2.id != move.chord || a == b)
                throw DomainError(Fault::NotApplicable, "no R1 kink at the site");
            PlainGaussCode next = plain;
            auto& comp = next.components[move.component];
            std::vector<Passage> kept;
            for (int p = 0; p < static_cast<int>(comp.size()); ++p)
                if (p != a && p != b) kept.push_back(comp[p]);
            comp = kept;
            return rerealize(next, move.seed);
        }
        case MoveKind::R1Add: {
            require_cut_free(code);
            PlainGaussCode next = plain;
            Role first = move.flag ? Role::Over : Role::Under;
            Role second = move.flag ? Role::Under : Role::Over;
            insert_at_gap(next, move.component, move.slot,
                          {Passage::classical(n, first, move.sign),
                           Passage::classical(n, second, move.sign)});
            return rerealize(next, move.seed);
        }
        case MoveKind::R2Remove: {
            require_cut_free(code);
            auto [o1, o2] = plain_gap_pair(move.component, move.slot);
            auto [u1, u2] = plain_gap_pair(move.component2, move.slot2);
            const auto& a = at(plain, move.component, o1);
            const auto& b = at(plain, move.component, o2);
            const auto& c = at(plain, move.component2, u1);
            const auto& d = at(plain, move.component2, u2);
            bool chords_match = (a.id == move.chord && b.id == move.chord2) &&
                                ((c.id == move.chord && d.id == move.chord2) ||
                                 (c.id == move.chord2 && d.id == move.chord));
            if (!chords_match || a.role != Role::Over || b.role != Role::Over ||
                c.role != Role::Under || d.role != Role::Under || a.sign != -b.sign)
                throw DomainError(Fault::NotApplicable, "no R2 bigon at the site");
            PlainGaussCode next = plain;
            for (int comp = 0; comp < next.num_components(); ++comp) {
                std::vector<Passage> kept;
                for (const auto& p : next.components[comp])
                    if (!(p.is_classical() && (p.id == move.chord || p.id == move.chord2)))
                        kept.push_back(p);
                next.components[comp] = kept;
            }
            return rerealize(next, move.seed);
        }
        case MoveKind::R2Add: {
            require_cut_free(code);
            PlainGaussCode next = plain;
            int cid = n, did = n + 1;
            if (move.component == move.component2 && move.slot == move.slot2) {
                // Nested poke of one arc under itself.
                insert_at_gap(next, move.component, move.slot,
                              {Passage::classical(cid, Role::Over, move.sign),
                               Passage::classical(did, Role::Over, -move.sign),
                               Passage::classical(did, Role::Under, -move.sign),
                               Passage::classical(cid, Role::Under, move.sign)});
            } else {
                std::vector<Passage> overs{Passage::classical(cid, Role::Over, move.sign),
                                           Passage::classical(did, Role::Over, -move.sign)};
                std::vector<Passage> unders =
                    move.flag ? std::vector<Passage>{Passage::classical(cid, Role::Under,
                                                                        move.sign),
                                                     Passage::classical(did, Role::Under,
                                                                        -move.sign)}
                              : std::vector<Passage>{Passage::classical(did, Role::Under,
                                                                        -move.sign),
                                                     Passage::classical(cid, Role::Under,
                                                                        move.sign)};
                // Insert the later gap first so earlier indices stay valid.
                bool same_comp = move.component == move.component2;
                if (same_comp && move.slot < move.slot2) {
                    insert_at_gap(next, move.component2, move.slot2, unders);
                    insert_at_gap(next, move.component, move.slot, overs);
                } else if (same_comp) {
                    insert_at_gap(next, move.component, move.slot, overs);
                    insert_at_gap(next, move.component2, move.slot2, unders);
                } else {
                    insert_at_gap(next, move.component, move.slot, overs);
                    insert_at_gap(next, move.component2, move.slot2, unders);
                }
            }
            return rerealize(next, move.seed);
        }
        case MoveKind::R3: {
            require_cut_free(code);
            auto [t1, t2] = plain_gap_pair(move.component, move.slot);
            auto [m1, m2] = plain_gap_pair(move.component2, move.slot2);
            auto [b1, b2] = plain_gap_pair(move.component3, move.slot3);
            const auto& pt1 = at(plain, move.component, t1);
            const auto& pt2 = at(plain, move.component, t2);
            const auto& pm1 = at(plain, move.component2, m1);
            const auto& pm2 = at(plain, move.component2, m2);
            const auto& pb1 = at(plain, move.component3, b1);
            const auto& pb2 = at(plain, move.component3, b2);
            int x = move.chord, y = move.chord2, z = move.chord3;
            bool top_ok = pt1.role == Role::Over && pt2.role == Role::Over &&
                          ((pt1.id == x && pt2.id == y) || (pt1.id == y && pt2.id == x));
            bool mid_ok = ((pm1.id == x && pm1.role == Role::Under && pm2.id == z &&
                            pm2.role == Role::Over) ||
                           (pm2.id == x && pm2.role == Role::Under && pm1.id == z &&
                            pm1.role == Role::Over));
            bool bot_ok = pb1.role == Role::Under && pb2.role == Role::Under &&
                          ((pb1.id == y && pb2.id == z) || (pb1.id == z && pb2.id == y));
            if (!top_ok || !mid_ok || !bot_ok)
                throw DomainError(Fault::NotApplicable, "no R3 triangle at the site");
            bool tx = pt1.id == x;
            bool mx = pm1.id == x && pm1.role == Role::Under;
            bool by = pb1.id == y;
            if (!r3_signs_admissible(plain, x, y, z, tx, mx, by))
                throw DomainError(Fault::NotApplicable, "R3 signs do not match the triangle");
            PlainGaussCode next = plain;
            std::swap(next.components[move.component][t1], next.components[move.component][t2]);
            std::swap(next.components[move.component2][m1], next.components[move.component2][m2]);
            std::swap(next.components[move.component3][b1], next.components[move.component3][b2]);
            return rerealize(next, move.seed);
        }
        case MoveKind::Detour: {
            require_cut_free(code);
            return rerealize(plain, move.seed);
        }
        case MoveKind::CP1: {
            ExtendedGaussCode next = code;
            const auto& comp = code.components[move.component];
            const int m = static_cast<int>(comp.size());
            if (m == 0) throw DomainError(Fault::NotApplicable, "no virtual passage");
            int v = -1;
            if ((move.slot + 1) % m == move.slot2 && !comp[move.slot2].is_classical())
                v = move.slot2;  // slide forward across the virtual at slot2
            else if ((move.slot2 + 1) % m == move.slot && !comp[move.slot].is_classical())
                v = move.slot;   // slide backward across the virtual at slot
            if (v < 0)
                throw DomainError(Fault::NotApplicable, "slots are not the sides of a virtual");
            next.remove_cut(Slot{move.component, move.slot});
            next.add_cut(Slot{move.component, move.slot2});
            return next;
        }
        case MoveKind::CP2Add: {
            ExtendedGaussCode next = code;
            if (move.slot < 0 || move.slot >= code.slot_count(move.component))
                throw DomainError(Fault::NotApplicable, "bad slot");
            next.add_cut(Slot{move.component, move.slot}, 2);
            return next;
        }
        case MoveKind::CP2Remove: {
            ExtendedGaussCode next = code;
            next.remove_cut(Slot{move.component, move.slot}, 2);
            return next;
        }
        case MoveKind::CP3Add: {
            ExtendedGaussCode next = code;
            for (const auto& s : cp3_slots(code, move.chord)) next.add_cut(s);
            return next;
        }
        case MoveKind::CP3Remove: {
            ExtendedGaussCode next = code;
            for (const auto& s : cp3_slots(code, move.chord)) next.remove_cut(s);
            return next;
        }
    }
    throw DomainError(Fault::NotApplicable, "unknown move kind");
}

WalkResult random_walk(const ExtendedGaussCode& code, int steps, uint64_t seed,
                       WalkOptions opts) {
    require_valid(code);
    Rng rng(seed);
    WalkResult res{code, {}};

    const std::vector<std::pair<MoveKind, int>> r_weights = {
        {MoveKind::R1Remove, 3}, {MoveKind::R2Remove, 3}, {MoveKind::R3, 3},
        {MoveKind::R1Add, 2},    {MoveKind::R2Add, 2},    {MoveKind::Detour, 2},
    };
    const std::vector<std::pair<MoveKind, int>> cp_weights = {
        {MoveKind::CP1, 3},    {MoveKind::CP2Add, 2},    {MoveKind::CP2Remove, 2},
        {MoveKind::CP3Add, 1}, {MoveKind::CP3Remove, 1},
    };
    const auto& weights = opts.cut_moves ? cp_weights : r_weights;

    for (int step = 0; step < steps; ++step) {
        std::vector<MoveInstance> all;
        try {
            all = enumerate_moves(res.code);
        } catch (const DomainError&) {
            break;
        }
        std::map<MoveKind, std::vector<MoveInstance>> buckets;
        int chords_now = num_chords(res.code);
        for (auto& mi : all) {
            if (mi.kind == MoveKind::R1Add && chords_now + 1 > opts.max_chords) continue;
            if (mi.kind == MoveKind::R2Add && chords_now + 2 > opts.max_chords) continue;
            buckets[mi.kind].push_back(mi);
        }

        int total_weight = 0;
        for (const auto& [kind, w] : weights)
            if (!buckets[kind].empty()) total_weight += w;
        if (total_weight == 0) {
            rng.next();  // keep the stream moving even when stuck
            continue;
        }
        int pick = rng.below(total_weight);
        MoveKind chosen = weights.front().first;
        for (const auto& [kind, w] : weights) {
            if (buckets[kind].empty()) continue;
            if (pick < w) {
                chosen = kind;
                break;
            }
            pick -= w;
        }
        auto& bucket = buckets[chosen];
        MoveInstance mi = bucket[rng.below(static_cast<int>(bucket.size()))];
        mi.seed = rng.derive();
        res.code = apply_move(res.code, mi);
        res.trace.push_back(mi);
    }
    return res;
}

}  // namespace vlink
