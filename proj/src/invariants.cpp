#include "vlink/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "vlink/errors.hpp"
#include "vlink/orientation.hpp"

namespace vlink {

LaurentPoly LaurentPoly::monomial(int exp, int64_t coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out += other;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            auto& slot = out.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) out.terms_.erase(e1 + e2);
        }
    return out;
}

LaurentPoly LaurentPoly::times_monomial(int exp, int64_t coeff) const {
    LaurentPoly out;
    if (coeff == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e + exp] = c * coeff;
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string var;
        if (e == 0)
            var = "";
        else if (e == 1)
            var = "A";
        else
            var = "A^" + std::to_string(e);
        if (var.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += var;
        else
            out += std::to_string(mag) + var;
    }
    return out;
}

int64_t writhe(const ExtendedGaussCode& code) {
    require_valid(code);
    int64_t w = 0;
    for (const auto& ch : chords_of(code)) w += ch.sign;
    return w;
}

int64_t odd_writhe(const ExtendedGaussCode& code) {
    if (code.num_components() != 1)
        throw DomainError(Fault::NotAKnot, "odd writhe is defined for knots");
    auto chords = chords_of(code);
    int64_t w = 0;
    for (int id : odd_crossings(code)) w += chords[id].sign;
    return w;
}

int64_t linking2(const ExtendedGaussCode& code, int i, int j) {
    require_valid(code);
    if (i == j || i < 0 || j < 0 || i >= code.num_components() || j >= code.num_components())
        throw DomainError(Fault::BadComponent, "linking needs two distinct components");
    int64_t sum = 0;
    for (const auto& ch : chords_of(code)) {
        int a = ch.over.component, b = ch.under.component;
        if ((a == i && b == j) || (a == j && b == i)) sum += ch.sign;
    }
    return sum;
}

std::map<std::pair<int, int>, int64_t> linking_matrix2(const ExtendedGaussCode& code) {
    require_valid(code);
    std::map<std::pair<int, int>, int64_t> out;
    int r = code.num_components();
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) out[{i, j}] = 0;
    for (const auto& ch : chords_of(code)) {
        int a = ch.over.component, b = ch.under.component;
        if (a == b) continue;
        out[{std::min(a, b), std::max(a, b)}] += ch.sign;
    }
    return out;
}

int64_t lk_n(const ExtendedGaussCode& code) {
    if (code.num_components() != 1)
        throw DomainError(Fault::NotAKnot, "lk_N is defined for knots");
    auto cover = coherent_double_cover(code);
    assert(cover.code.num_components() == 2);
    int64_t doubled = linking2(cover.code, 0, 1);
    assert(doubled % 2 == 0);
    return doubled / 2;
}

namespace {

// Sum of crossing signs between components i and j with the over passage on
// i, each sign flipped when exactly one strand lies on a reversed segment.
int64_t adjusted_over_sum(const ExtendedGaussCode& code, const OrientationAssignment& ori,
                          int i, int j) {
    int64_t sum = 0;
    for (const auto& ch : chords_of(code)) {
        if (ch.over.component != i || ch.under.component != j) continue;
        uint8_t b1 = ori.entry_bit(ch.over.component, ch.over.position);
        uint8_t b2 = ori.entry_bit(ch.under.component, ch.under.position);
        sum += (b1 ^ b2) ? -ch.sign : ch.sign;
    }
    return sum;
}

void require_pair(const ExtendedGaussCode& code, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= code.num_components() || j >= code.num_components())
        throw DomainError(Fault::BadComponent, "needs two distinct components");
}

}  // namespace

int64_t lambda_abs(const ExtendedGaussCode& code, int i, int j) {
    require_valid(code);
    require_pair(code, i, j);
    if (!is_even(code).even)
        throw DomainError(Fault::NotEven, "lambda is defined for even diagrams");
    auto ori = solve_flavor(code, OrientationFlavor::Virtual);
    if (!ori.feasible())
        throw DomainError(Fault::Infeasible,
                          "virtual orientation infeasible on component " +
                              std::to_string(ori.offending_component));
    int64_t v = adjusted_over_sum(code, *ori.assignment, i, j);
    return v < 0 ? -v : v;
}

int64_t nu_abs(const ExtendedGaussCode& code, int i, int j) {
    require_valid(code);
    require_pair(code, i, j);
    if (!is_even(code).even)
        throw DomainError(Fault::NotEven, "nu is defined for even diagrams");
    if (!is_cut_system(code))
        throw DomainError(Fault::NotACutSystem, "nu needs a cut system");
    auto ori = solve_flavor(code, OrientationFlavor::Cut);
    assert(ori.feasible());
    int64_t v = adjusted_over_sum(code, *ori.assignment, i, j);
    return v < 0 ? -v : v;
}

namespace {

int64_t cover_pair_linking2(const CoverCode& cover, int a, int b) {
    return linking2(cover.code, a, b);
}

}  // namespace

std::array<int64_t, 2> q_set2(const ExtendedGaussCode& code, int i, int j) {
    require_valid(code);
    require_pair(code, i, j);
    if (!is_even(code).even)
        throw DomainError(Fault::NotEven, "Q sets are defined for even diagrams");
    auto cover = coherent_double_cover(code);
    int i1 = cover.pairing[i][0];
    int j1 = cover.pairing[j][0], j2 = cover.pairing[j][1];
    std::array<int64_t, 2> q{cover_pair_linking2(cover, i1, j1),
                             cover_pair_linking2(cover, i1, j2)};
    if (q[0] > q[1]) std::swap(q[0], q[1]);
    return q;
}

int64_t self_pair_link2(const ExtendedGaussCode& code, int i) {
    require_valid(code);
    if (i < 0 || i >= code.num_components())
        throw DomainError(Fault::BadComponent, "no such component");
    if (!is_even(code).even)
        throw DomainError(Fault::NotEven, "self-pair linking is defined for even diagrams");
    auto cover = coherent_double_cover(code);
    return cover_pair_linking2(cover, cover.pairing[i][0], cover.pairing[i][1]);
}

int64_t cover_over_sum(const OrientedCover& oc, int i, int j, int k) {
    const auto& cover = oc.cover;
    int target_over = cover.pairing[i][k];
    int j1 = cover.pairing[j][0], j2 = cover.pairing[j][1];
    int64_t sum = 0;
    for (const auto& ch : chords_of(cover.code)) {
        if (ch.over.component != target_over) continue;
        if (ch.under.component != j1 && ch.under.component != j2) continue;
        int base_chord = ch.id / 2;
        sum += oc.lifted_sign[base_chord][ch.id % 2];
    }
    return sum;
}

LaurentPoly f_polynomial(const ExtendedGaussCode& code, int cap) {
    require_valid(code);
    const PlainGaussCode plain = project_to_plain(code);
    const int n = num_chords(plain);
    if (n > cap)
        throw DomainError(Fault::TooLarge, "state sum capped at " + std::to_string(cap) +
                                               " chords");

    // Kauffman bracket by full state sum. Ports: each classical passage has
    // an in end (2*pos) and an out end (2*pos+1); traversal arcs join
    // out(p) -- in(p+1). A smoothing joins the four ends of a chord two
    // ways; the oriented splice weighs A^sign, the disoriented one
    // A^(-sign). Loops are components of the resulting 2-regular graph.
    std::vector<int> comp_base;
    int total_ports = 0;
    int free_circles = 0;
    for (const auto& comp : plain.components) {
        comp_base.push_back(total_ports);
        total_ports += 2 * static_cast<int>(comp.size());
        if (comp.empty()) free_circles++;
    }
    auto in_port = [&](const PassageRef& ref) {
        return comp_base[ref.component] + 2 * ref.position;
    };
    auto out_port = [&](const PassageRef& ref) {
        return comp_base[ref.component] + 2 * ref.position + 1;
    };

    // Arc joins, fixed across states.
    std::vector<std::pair<int, int>> arc_edges;
    for (int c = 0; c < plain.num_components(); ++c) {
        const int m = static_cast<int>(plain.components[c].size());
        for (int p = 0; p < m; ++p)
            arc_edges.push_back({out_port({c, p}), in_port({c, (p + 1) % m})});
    }

    const auto chords = chords_of(plain);
    LaurentPoly bracket;
    const LaurentPoly d = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    const int64_t nstates = int64_t{1} << n;
    std::vector<int> uf(total_ports);
    for (int64_t state = 0; state < nstates; ++state) {
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) uf[a] = b;
        };
        for (const auto& [a, b] : arc_edges) unite(a, b);

        int exp = 0;
        for (int x = 0; x < n; ++x) {
            const auto& ch = chords[x];
            bool oriented_splice = ((state >> x) & 1) == 0;
            exp += oriented_splice ? ch.sign : -ch.sign;
            if (oriented_splice) {
                unite(in_port(ch.over), out_port(ch.under));
                unite(in_port(ch.under), out_port(ch.over));
            } else {
                unite(in_port(ch.over), in_port(ch.under));
                unite(out_port(ch.over), out_port(ch.under));
            }
        }
        int loops = free_circles;
        for (int x = 0; x < total_ports; ++x)
            if (find(x) == x) loops++;

        // d^(loops-1), d = -A^2 - A^-2.
        LaurentPoly term = LaurentPoly::monomial(exp);
        for (int t = 0; t < loops - 1; ++t) term = term * d;
        bracket += term;
    }

    // Normalize by (-A^3)^(-writhe).
    int64_t w = 0;
    for (const auto& ch : chords) w += ch.sign;
    LaurentPoly norm = LaurentPoly::monomial(static_cast<int>(-3 * w), (w % 2 == 0) ? 1 : -1);
    return bracket * norm;
}

CoverInvariantVector cover_invariant_vector(const CoverCode& cover, int f_cap) {
    CoverInvariantVector v;
    const int r = static_cast<int>(cover.pairing.size());
    for (int i = 0; i < r; ++i)
        v.lifts_per_base.push_back(cover.pairing[i][0] == cover.pairing[i][1] ? 1 : 2);
    v.normal = is_normal(cover.code);

    // Doubled linking matrix over cover components, canonicalized over the
    // per-base swap of the two lifts.
    auto matrix = linking_matrix2(cover.code);
    std::vector<int> swappable;
    for (int i = 0; i < r; ++i)
        if (v.lifts_per_base[i] == 2) swappable.push_back(i);
    if (swappable.size() > 20)
        throw DomainError(Fault::TooLarge, "too many components to canonicalize");

    const int ncov = cover.code.num_components();
    std::vector<int64_t> best;
    const int masks = 1 << static_cast<int>(swappable.size());
    for (int mask = 0; mask < masks; ++mask) {
        std::vector<int> relabel(ncov);
        std::iota(relabel.begin(), relabel.end(), 0);
        for (size_t t = 0; t < swappable.size(); ++t)
            if ((mask >> t) & 1) {
                auto [a, b] = cover.pairing[swappable[t]];
                std::swap(relabel[a], relabel[b]);
            }
        std::vector<int64_t> flat(ncov * ncov, 0);
        for (const auto& [pair, val] : matrix) {
            int a = relabel[pair.first], b = relabel[pair.second];
            flat[std::min(a, b) * ncov + std::max(a, b)] = val;
        }
        if (best.empty() || flat < best) best = std::move(flat);
    }
    v.linking_canonical = std::move(best);

    if (num_chords(cover.code) <= f_cap) v.f = f_polynomial(cover.code, f_cap);
    return v;
}

InvariantReport compute_report(const ExtendedGaussCode& code, int f_cap) {
    require_valid(code);
    InvariantReport rep;
    rep.components = code.num_components();
    auto evenness = is_even(code);
    rep.component_even = evenness.component_even;
    rep.even = evenness.even;
    rep.normal = is_normal(code);
    rep.writhe = writhe(code);
    rep.linking2 = linking_matrix2(code);
    if (rep.components == 1) rep.odd_writhe = odd_writhe(code);
    if (num_chords(code) <= f_cap) rep.f_poly = f_polynomial(code, f_cap);

    if (rep.even) {
        auto vo = solve_flavor(code, OrientationFlavor::Virtual);
        if (vo.feasible()) {
            for (int i = 0; i < rep.components; ++i)
                for (int j = 0; j < rep.components; ++j)
                    if (i != j) rep.lambda_abs[{i, j}] = lambda_abs(code, i, j);
        }
    }

    // Cover section: the code's own cut system when present, otherwise the
    // canonical one.
    ExtendedGaussCode with_cuts = code;
    if (!code.has_cuts()) {
        with_cuts = canonical_cut_system(code);
        rep.used_canonical_cuts = true;
    }
    rep.cut_system = is_cut_system(with_cuts);
    if (rep.cut_system) {
        auto cover = coherent_double_cover(with_cuts);
        InvariantReport::Cover cov;
        cov.components = cover.code.num_components();
        cov.normal = is_normal(cover.code);
        cov.labels.resize(cov.components);
        for (int i = 0; i < rep.components; ++i) {
            cov.labels[cover.pairing[i][0]] = std::to_string(i + 1) + ".1";
            if (cover.pairing[i][1] != cover.pairing[i][0])
                cov.labels[cover.pairing[i][1]] = std::to_string(i + 1) + ".2";
        }
        cov.linking2 = linking_matrix2(cover.code);
        rep.cover = std::move(cov);

        if (rep.components == 1) rep.lk_n = lk_n(with_cuts);
        if (rep.even) {
            for (int i = 0; i < rep.components; ++i) {
                rep.self_pair2[i] = self_pair_link2(with_cuts, i);
                for (int j = 0; j < rep.components; ++j)
                    if (i != j) {
                        rep.nu_abs[{i, j}] = nu_abs(with_cuts, i, j);
                        if (i < j) rep.q_sets2[{i, j}] = q_set2(with_cuts, i, j);
                    }
            }
        }
    }
    return rep;
}

}  // namespace vlink
