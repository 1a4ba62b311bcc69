#include "vlink/orientation.hpp"

#include <cassert>
#include <numeric>

#include "vlink/errors.hpp"

namespace vlink {

namespace {

class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // Representative of x and the parity of x relative to it.
    std::pair<int, uint8_t> find(int x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, par] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= par;
        return {root, parity_[x]};
    }

    // Impose a ^ b == rel; false on contradiction.
    bool unite(int a, int b, uint8_t rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return static_cast<uint8_t>(pa ^ pb) == rel;
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ rel;
        return true;
    }

    uint8_t value(int x) {
        auto [root, par] = find(x);
        (void)root;
        return par;  // free roots resolve to 0
    }

private:
    std::vector<int> parent_;
    std::vector<uint8_t> parity_;
};

bool flips_at_passage(const Passage& p, OrientationFlavor flavor) {
    switch (flavor) {
        case OrientationFlavor::Alternate: return p.is_classical();
        case OrientationFlavor::Cut: return false;
        case OrientationFlavor::Virtual: return !p.is_classical();
    }
    return false;
}

bool flips_at_cuts(OrientationFlavor flavor) {
    return flavor != OrientationFlavor::Virtual;
}

// Per component: prefix[i] = parity of flip points strictly before passage i
// in the walk (passage 0, cuts of slot 0, passage 1, ...), and the total
// flip parity around the component.
struct FlipParities {
    std::vector<std::vector<uint8_t>> prefix;
    std::vector<uint8_t> total;
    std::vector<int> flip_counts;
};

FlipParities flip_parities(const ExtendedGaussCode& code, OrientationFlavor flavor) {
    FlipParities fp;
    fp.prefix.resize(code.components.size());
    fp.total.resize(code.components.size(), 0);
    fp.flip_counts.resize(code.components.size(), 0);
    for (int c = 0; c < code.num_components(); ++c) {
        const auto& comp = code.components[c];
        fp.prefix[c].resize(comp.size(), 0);
        int count = 0;
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
            fp.prefix[c][i] = static_cast<uint8_t>(count & 1);
            if (flips_at_passage(comp[i], flavor)) count++;
            if (flips_at_cuts(flavor)) count += code.cuts_in_slot(Slot{c, i});
        }
        if (comp.empty() && flips_at_cuts(flavor)) count += code.cuts_in_slot(Slot{c, 0});
        fp.total[c] = static_cast<uint8_t>(count & 1);
        fp.flip_counts[c] = count;
    }
    return fp;
}

OrientationAssignment make_assignment(const ExtendedGaussCode& code, OrientationFlavor flavor,
                                      const FlipParities& fp, const std::vector<uint8_t>& x) {
    OrientationAssignment a;
    a.flavor = flavor;
    a.start_bits = x;
    a.entry_bits.resize(code.components.size());
    for (int c = 0; c < code.num_components(); ++c) {
        const auto& prefix = fp.prefix[c];
        a.entry_bits[c].resize(prefix.size());
        for (size_t i = 0; i < prefix.size(); ++i)
            a.entry_bits[c][i] = static_cast<uint8_t>(x[c] ^ prefix[i]);
    }
    return a;
}

}  // namespace

OrientationResult solve_alternate(const ExtendedGaussCode& code) {
    require_valid(code);
    OrientationResult res;
    auto fp = flip_parities(code, OrientationFlavor::Alternate);
    for (int c = 0; c < code.num_components(); ++c)
        if (fp.total[c]) {
            res.offending_component = c;
            return res;
        }

    ParityUnionFind uf(code.num_components());
    for (const auto& ch : chords_of(code)) {
        uint8_t p1 = fp.prefix[ch.over.component][ch.over.position];
        uint8_t p2 = fp.prefix[ch.under.component][ch.under.position];
        if (!uf.unite(ch.over.component, ch.under.component,
                      static_cast<uint8_t>(1 ^ p1 ^ p2)))
            return res;
    }

    std::vector<uint8_t> x(code.num_components());
    for (int c = 0; c < code.num_components(); ++c) x[c] = uf.value(c);
    res.assignment = make_assignment(code, OrientationFlavor::Alternate, fp, x);
    return res;
}

OrientationResult solve_flavor(const ExtendedGaussCode& code, OrientationFlavor flavor) {
    if (flavor == OrientationFlavor::Alternate) return solve_alternate(code);
    require_valid(code);
    OrientationResult res;
    auto fp = flip_parities(code, flavor);
    for (int c = 0; c < code.num_components(); ++c)
        if (fp.total[c]) {
            res.offending_component = c;
            return res;
        }
    std::vector<uint8_t> x(code.num_components(), 0);
    res.assignment = make_assignment(code, flavor, fp, x);
    return res;
}

bool is_normal(const ExtendedGaussCode& code) {
    ExtendedGaussCode erased = code;
    erased.cut_points.clear();
    bool feasible = solve_alternate(erased).feasible();
    if (code.num_components() == 1) {
        // Independent criterion for knots: every chord has an even number
        // of interior endpoints.
        bool all_even = odd_crossings(erased).empty();
        assert(feasible == all_even);
        (void)all_even;
    }
    return feasible;
}

bool is_cut_system(const ExtendedGaussCode& code) {
    return solve_alternate(code).feasible();
}

ExtendedGaussCode canonical_cut_system(const ExtendedGaussCode& code) {
    require_valid(code);
    if (code.has_cuts())
        throw DomainError(Fault::NonEmptyCutSet, "canonical cut system needs an empty cut set");
    ExtendedGaussCode out = code;
    for (int c = 0; c < out.num_components(); ++c)
        for (int i = 0; i < static_cast<int>(out.components[c].size()); ++i)
            if (!out.components[c][i].is_classical()) out.add_cut(Slot{c, i});
    return out;
}

int interior_endpoint_count(const ExtendedGaussCode& code, int chord_id) {
    require_valid(code);
    if (code.num_components() != 1)
        throw DomainError(Fault::NotAKnot, "interior counts are defined for knots");
    auto view = plain_view(code);
    auto chords = chords_of(code);
    if (chord_id < 0 || chord_id >= static_cast<int>(chords.size()))
        throw DomainError(Fault::InvalidCode, "no such chord");
    const auto& ch = chords[chord_id];
    int tail = view.plain_index[0][ch.over.position];
    int head = view.plain_index[0][ch.under.position];
    int m = view.classical_count(0);
    return (head - tail + m) % m - 1;
}

int interior_cut_count(const ExtendedGaussCode& code, int chord_id) {
    require_valid(code);
    if (code.num_components() != 1)
        throw DomainError(Fault::NotAKnot, "interior counts are defined for knots");
    auto chords = chords_of(code);
    if (chord_id < 0 || chord_id >= static_cast<int>(chords.size()))
        throw DomainError(Fault::InvalidCode, "no such chord");
    const auto& ch = chords[chord_id];
    int a = ch.over.position;
    int b = ch.under.position;
    int m = static_cast<int>(code.components[0].size());
    // Cut points in slots a..b-1 (cyclically) lie strictly inside I_c.
    int n = 0;
    for (int s = a; s != b; s = (s + 1) % m) n += code.cuts_in_slot(Slot{0, s});
    return n;
}

std::vector<int> odd_crossings(const ExtendedGaussCode& code) {
    require_valid(code);
    if (code.num_components() != 1)
        throw DomainError(Fault::NotAKnot, "odd crossings are defined for knots");
    std::vector<int> out;
    int n = num_chords(code);
    for (int id = 0; id < n; ++id)
        if (interior_endpoint_count(code, id) % 2 == 1) out.push_back(id);
    return out;
}

}  // namespace vlink
