#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vlink {

enum class Role : uint8_t { Over, Under };

// One passage of a strand through a double point. Cut points are not
// passages; they live in the slots between passages.
struct Passage {
    enum class Kind : uint8_t { Classical, Virtual };

    Kind kind = Kind::Classical;
    int id = 0;              // chord id (Classical) or virtual-crossing id (Virtual)
    Role role = Role::Over;  // Classical only
    int sign = +1;           // Classical only, +1 or -1

    static Passage classical(int id, Role role, int sign) {
        Passage p;
        p.kind = Kind::Classical;
        p.id = id;
        p.role = role;
        p.sign = sign;
        return p;
    }
    static Passage virt(int id) {
        Passage p;
        p.kind = Kind::Virtual;
        p.id = id;
        p.role = Role::Over;
        p.sign = +1;
        return p;
    }
    bool is_classical() const { return kind == Kind::Classical; }
    bool operator==(const Passage&) const = default;
};

// Slot s on a component is the gap after passage s (cyclic). A component
// with zero passages has the single slot 0.
struct Slot {
    int component = 0;
    int index = 0;
    auto operator<=>(const Slot&) const = default;
};

// A virtual link diagram with a (possibly empty) cut system. The traversal
// order of each component's sequence is the orientation of the diagram.
struct ExtendedGaussCode {
    std::vector<std::vector<Passage>> components;
    std::map<Slot, int> cut_points;  // slot -> multiplicity

    // Optional display names, indexed by dense id. Empty means "number
    // identifiers 1,2,... in traversal order" when serializing.
    std::vector<std::string> chord_names;
    std::vector<std::string> virtual_names;

    int num_components() const { return static_cast<int>(components.size()); }
    int slot_count(int component) const {
        int m = static_cast<int>(components[component].size());
        return m == 0 ? 1 : m;
    }
    int cut_count() const;
    int cut_count_on(int component) const;
    void add_cut(Slot s, int k = 1);
    void remove_cut(Slot s, int k = 1);  // throws if fewer than k present
    int cuts_in_slot(Slot s) const;
    bool has_cuts() const { return !cut_points.empty(); }

    bool operator==(const ExtendedGaussCode& other) const {
        return components == other.components && cut_points == other.cut_points;
    }
};

// An extended code with no virtual passages and no cut points.
using PlainGaussCode = ExtendedGaussCode;

struct PassageRef {
    int component = 0;
    int position = 0;  // index into the extended sequence
    auto operator<=>(const PassageRef&) const = default;
};

// Derived view of a classical crossing.
struct ChordInfo {
    int id = 0;
    PassageRef over;
    PassageRef under;
    int sign = +1;
};

struct CrossingClass {
    int over_component = 0;
    int under_component = 0;
    bool self() const { return over_component == under_component; }
};

// Empty list iff all structural invariants hold; each violation names the
// offending identifier. Ids must be dense (0..n-1 per kind).
std::vector<std::string> validate(const ExtendedGaussCode& code);
void require_valid(const ExtendedGaussCode& code);  // throws DomainError(InvalidCode)

int num_chords(const ExtendedGaussCode& code);
int num_virtuals(const ExtendedGaussCode& code);
std::vector<ChordInfo> chords_of(const ExtendedGaussCode& code);  // indexed by chord id

PlainGaussCode project_to_plain(const ExtendedGaussCode& code);
bool is_plain(const ExtendedGaussCode& code);

std::map<int, CrossingClass> classify_crossings(const ExtendedGaussCode& code);

struct Evenness {
    std::vector<bool> component_even;
    bool even = true;
};
Evenness is_even(const ExtendedGaussCode& code);

// SwitchAll swaps over/under roles and negates all signs; Reflect negates
// all signs and keeps roles.
enum class MirrorMode { SwitchAll, Reflect };
ExtendedGaussCode mirror_switch(const ExtendedGaussCode& code, MirrorMode mode);

// Dense relabeling by traversal order of first occurrence; drops names.
ExtendedGaussCode normalize_ids(const ExtendedGaussCode& code);

// Classical-passage positions of an extended code.
struct PlainView {
    std::vector<std::vector<int>> classical_positions;  // per component
    std::vector<std::vector<int>> plain_index;          // ext position -> plain index or -1
    int classical_count(int component) const {
        return static_cast<int>(classical_positions[component].size());
    }
};
PlainView plain_view(const ExtendedGaussCode& code);

}  // namespace vlink
