#include "vlink/gauss_code.hpp"

#include <algorithm>
#include <map>

#include "vlink/errors.hpp"

namespace vlink {

int ExtendedGaussCode::cut_count() const {
    int n = 0;
    for (const auto& [slot, k] : cut_points) n += k;
    return n;
}

int ExtendedGaussCode::cut_count_on(int component) const {
    int n = 0;
    for (const auto& [slot, k] : cut_points)
        if (slot.component == component) n += k;
    return n;
}

void ExtendedGaussCode::add_cut(Slot s, int k) {
    if (k <= 0) return;
    cut_points[s] += k;
}

void ExtendedGaussCode::remove_cut(Slot s, int k) {
    auto it = cut_points.find(s);
    if (it == cut_points.end() || it->second < k)
        throw DomainError(Fault::NotApplicable, "no such cut point to remove");
    it->second -= k;
    if (it->second == 0) cut_points.erase(it);
}

int ExtendedGaussCode::cuts_in_slot(Slot s) const {
    auto it = cut_points.find(s);
    return it == cut_points.end() ? 0 : it->second;
}

namespace {

struct IdUse {
    int count = 0;
    int over_count = 0;
    int first_sign = 0;
    bool sign_mismatch = false;
};

std::string display_id(const std::vector<std::string>& names, int id) {
    if (id >= 0 && id < static_cast<int>(names.size())) return names[id];
    return std::to_string(id);
}

}  // namespace

std::vector<std::string> validate(const ExtendedGaussCode& code) {
    std::vector<std::string> out;
    std::map<int, IdUse> chords;
    std::map<int, int> virtuals;

    for (const auto& comp : code.components) {
        for (const auto& p : comp) {
            if (p.kind == Passage::Kind::Classical) {
                auto& u = chords[p.id];
                u.count++;
                if (p.role == Role::Over) u.over_count++;
                if (p.sign != +1 && p.sign != -1) {
                    out.push_back("chord " + display_id(code.chord_names, p.id) +
                                  " has invalid sign");
                    continue;
                }
                if (u.first_sign == 0)
                    u.first_sign = p.sign;
                else if (u.first_sign != p.sign)
                    u.sign_mismatch = true;
            } else {
                virtuals[p.id]++;
            }
        }
    }

    for (const auto& [id, u] : chords) {
        if (u.count != 2) {
            out.push_back("chord " + display_id(code.chord_names, id) + " has " +
                          std::to_string(u.count) +
                          (u.count == 1 ? " occurrence" : " occurrences"));
            continue;
        }
        if (u.over_count != 1)
            out.push_back("chord " + display_id(code.chord_names, id) +
                          " lacks one over and one under passage");
        if (u.sign_mismatch)
            out.push_back("chord " + display_id(code.chord_names, id) + " has mismatched signs");
    }
    for (const auto& [id, n] : virtuals) {
        if (n != 2)
            out.push_back("virtual " + display_id(code.virtual_names, id) + " has " +
                          std::to_string(n) + (n == 1 ? " occurrence" : " occurrences"));
    }

    // Dense 0-based identifiers keep every derived table indexable by id.
    auto check_dense = [&out](const auto& uses, const char* what) {
        int n = static_cast<int>(uses.size());
        for (const auto& [id, u] : uses)
            if (id < 0 || id >= n) {
                out.push_back(std::string(what) + " ids are not dense");
                break;
            }
    };
    check_dense(chords, "chord");
    check_dense(virtuals, "virtual");

    for (const auto& [slot, k] : code.cut_points) {
        if (slot.component < 0 || slot.component >= code.num_components()) {
            out.push_back("cut point on missing component " + std::to_string(slot.component));
            continue;
        }
        if (slot.index < 0 || slot.index >= code.slot_count(slot.component))
            out.push_back("cut point slot " + std::to_string(slot.index) +
                          " out of range on component " + std::to_string(slot.component));
        if (k <= 0) out.push_back("cut point with nonpositive multiplicity");
    }
    return out;
}

void require_valid(const ExtendedGaussCode& code) {
    auto v = validate(code);
    if (!v.empty()) throw DomainError(Fault::InvalidCode, v.front());
}

int num_chords(const ExtendedGaussCode& code) {
    int n = 0;
    for (const auto& comp : code.components)
        for (const auto& p : comp)
            if (p.is_classical()) n++;
    return n / 2;
}

int num_virtuals(const ExtendedGaussCode& code) {
    int n = 0;
    for (const auto& comp : code.components)
        for (const auto& p : comp)
            if (!p.is_classical()) n++;
    return n / 2;
}

std::vector<ChordInfo> chords_of(const ExtendedGaussCode& code) {
    std::vector<ChordInfo> chords(num_chords(code));
    for (int c = 0; c < code.num_components(); ++c) {
        const auto& comp = code.components[c];
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
            const auto& p = comp[i];
            if (!p.is_classical()) continue;
            auto& info = chords[p.id];
            info.id = p.id;
            info.sign = p.sign;
            if (p.role == Role::Over)
                info.over = PassageRef{c, i};
            else
                info.under = PassageRef{c, i};
        }
    }
    return chords;
}

PlainGaussCode project_to_plain(const ExtendedGaussCode& code) {
    require_valid(code);
    PlainGaussCode plain;
    plain.components.resize(code.components.size());
    for (size_t c = 0; c < code.components.size(); ++c)
        for (const auto& p : code.components[c])
            if (p.is_classical()) plain.components[c].push_back(p);
    plain.chord_names = code.chord_names;
    return plain;
}

bool is_plain(const ExtendedGaussCode& code) {
    if (code.has_cuts()) return false;
    for (const auto& comp : code.components)
        for (const auto& p : comp)
            if (!p.is_classical()) return false;
    return true;
}

std::map<int, CrossingClass> classify_crossings(const ExtendedGaussCode& code) {
    require_valid(code);
    std::map<int, CrossingClass> out;
    for (const auto& ch : chords_of(code))
        out[ch.id] = CrossingClass{ch.over.component, ch.under.component};
    return out;
}

Evenness is_even(const ExtendedGaussCode& code) {
    require_valid(code);
    Evenness e;
    for (const auto& comp : code.components) {
        int classical = 0;
        for (const auto& p : comp)
            if (p.is_classical()) classical++;
        bool even = classical % 2 == 0;
        e.component_even.push_back(even);
        e.even = e.even && even;
    }
    return e;
}

ExtendedGaussCode mirror_switch(const ExtendedGaussCode& code, MirrorMode mode) {
    require_valid(code);
    ExtendedGaussCode out = code;
    for (auto& comp : out.components)
        for (auto& p : comp) {
            if (!p.is_classical()) continue;
            p.sign = -p.sign;
            if (mode == MirrorMode::SwitchAll)
                p.role = p.role == Role::Over ? Role::Under : Role::Over;
        }
    return out;
}

ExtendedGaussCode normalize_ids(const ExtendedGaussCode& code) {
    ExtendedGaussCode out = code;
    out.chord_names.clear();
    out.virtual_names.clear();
    std::map<int, int> chord_map, virtual_map;
    for (auto& comp : out.components)
        for (auto& p : comp) {
            auto& table = p.is_classical() ? chord_map : virtual_map;
            auto [it, inserted] = table.try_emplace(p.id, static_cast<int>(table.size()));
            p.id = it->second;
        }
    return out;
}

PlainView plain_view(const ExtendedGaussCode& code) {
    PlainView v;
    v.classical_positions.resize(code.components.size());
    v.plain_index.resize(code.components.size());
    for (size_t c = 0; c < code.components.size(); ++c) {
        const auto& comp = code.components[c];
        v.plain_index[c].assign(comp.size(), -1);
        for (int i = 0; i < static_cast<int>(comp.size()); ++i)
            if (comp[i].is_classical()) {
                v.plain_index[c][i] = static_cast<int>(v.classical_positions[c].size());
                v.classical_positions[c].push_back(i);
            }
    }
    return v;
}

}  // namespace vlink
