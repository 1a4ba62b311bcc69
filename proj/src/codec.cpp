#include "vlink/codec.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vlink/errors.hpp"

namespace vlink {

namespace {

bool id_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '*';
}

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    int line = 1, column = 1;
    std::string word;
    int word_col = 0;
    auto flush_word = [&]() {
        if (!word.empty()) {
            current.push_back(Token{word, line, word_col});
            word.clear();
        }
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush_word();
            lines.push_back(std::move(current));
            current.clear();
            line++;
            column = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush_word();
        } else {
            if (word.empty()) word_col = column;
            word.push_back(ch);
        }
        column++;
    }
    flush_word();
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

}  // namespace

ExtendedGaussCode parse(const std::string& text) {
    ExtendedGaussCode code;
    std::map<std::string, int> chord_ids, virtual_ids;

    for (const auto& line : tokenize(text)) {
        if (line.empty()) continue;
        std::vector<Passage> comp;
        const int comp_index = code.num_components();
        std::vector<std::pair<int, int>> pending_cuts;  // (slot, count)

        if (line.size() == 1 && line[0].text == "()") {
            code.components.push_back({});
            continue;
        }

        for (const auto& tok : line) {
            const std::string& t = tok.text;
            if (t == "()")
                throw SyntaxError(tok.line, tok.column,
                                  "'()' must be the only token on its line");
            if (t == "#") {
                if (comp.empty())
                    throw SyntaxError(tok.line, tok.column,
                                      "cut point with no preceding passage");
                pending_cuts.push_back({static_cast<int>(comp.size()) - 1, 1});
                continue;
            }
            char head = t[0];
            if (head == 'O' || head == 'U') {
                if (t.size() < 3)
                    throw SyntaxError(tok.line, tok.column, "missing sign on '" + t + "'");
                char sign_ch = t.back();
                if (sign_ch != '+' && sign_ch != '-')
                    throw SyntaxError(tok.line, tok.column, "missing sign on '" + t + "'");
                std::string id = t.substr(1, t.size() - 2);
                for (char ch : id)
                    if (!id_char(ch))
                        throw SyntaxError(tok.line, tok.column, "bad identifier in '" + t + "'");
                if (id.empty())
                    throw SyntaxError(tok.line, tok.column, "missing identifier in '" + t + "'");
                auto [it, ignore] = chord_ids.try_emplace(id, static_cast<int>(chord_ids.size()));
                comp.push_back(Passage::classical(it->second,
                                                  head == 'O' ? Role::Over : Role::Under,
                                                  sign_ch == '+' ? +1 : -1));
                continue;
            }
            if (head == 'V') {
                std::string id = t.substr(1);
                for (char ch : id)
                    if (!id_char(ch))
                        throw SyntaxError(tok.line, tok.column, "bad identifier in '" + t + "'");
                if (id.empty())
                    throw SyntaxError(tok.line, tok.column, "missing identifier in '" + t + "'");
                auto [it, ignore] =
                    virtual_ids.try_emplace(id, static_cast<int>(virtual_ids.size()));
                comp.push_back(Passage::virt(it->second));
                continue;
            }
            throw SyntaxError(tok.line, tok.column, "unknown token '" + t + "'");
        }
        code.components.push_back(std::move(comp));
        for (auto [slot, k] : pending_cuts) code.add_cut(Slot{comp_index, slot}, k);
    }

    // Validate against the identifiers as written; the returned code keeps
    // only the normalized dense ids.
    ExtendedGaussCode named = code;
    named.chord_names.resize(chord_ids.size());
    named.virtual_names.resize(virtual_ids.size());
    for (const auto& [name, id] : chord_ids) named.chord_names[id] = name;
    for (const auto& [name, id] : virtual_ids) named.virtual_names[id] = name;
    auto violations = validate(named);
    if (!violations.empty())
        throw DomainError(Fault::InvalidCode, violations.front());
    return code;
}

std::string serialize(const ExtendedGaussCode& code) {
    require_valid(code);
    for (const auto& [slot, k] : code.cut_points)
        if (code.components[slot.component].empty())
            throw DomainError(Fault::InvalidCode,
                              "cut points on a crossing-free component are not representable");

    // Canonical names unless the code carries display names.
    std::map<int, std::string> chord_name, virtual_name;
    auto name_of = [](const std::vector<std::string>& names, int id,
                      std::map<int, std::string>& cache, int& counter) -> std::string {
        if (id < static_cast<int>(names.size())) return names[id];
        auto it = cache.find(id);
        if (it != cache.end()) return it->second;
        std::string name = std::to_string(++counter);
        cache[id] = name;
        return name;
    };

    // Number fresh identifiers in traversal order of first occurrence.
    int chord_counter = 0, virtual_counter = 0;
    std::ostringstream out;
    for (int c = 0; c < code.num_components(); ++c) {
        const auto& comp = code.components[c];
        if (comp.empty()) {
            out << "()\n";
            continue;
        }
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
            if (i > 0) out << ' ';
            const auto& p = comp[i];
            if (p.is_classical()) {
                out << (p.role == Role::Over ? 'O' : 'U')
                    << name_of(code.chord_names, p.id, chord_name, chord_counter)
                    << (p.sign > 0 ? '+' : '-');
            } else {
                out << 'V' << name_of(code.virtual_names, p.id, virtual_name, virtual_counter);
            }
            for (int t = 0; t < code.cuts_in_slot(Slot{c, i}); ++t) out << " #";
        }
        out << '\n';
    }
    return out.str();
}

std::string format_doubled(long long doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

namespace {

nlohmann::ordered_json doubled_json(long long doubled) {
    if (doubled % 2 == 0) return nlohmann::ordered_json(doubled / 2);
    return nlohmann::ordered_json(format_doubled(doubled));
}

std::string pair_key(const std::pair<int, int>& p) {
    return std::to_string(p.first + 1) + "," + std::to_string(p.second + 1);
}

}  // namespace

std::string emit_report(const InvariantReport& rep) {
    using json = nlohmann::ordered_json;
    json j;
    j["components"] = rep.components;
    j["even"] = rep.even;
    j["component_even"] = rep.component_even;
    j["normal"] = rep.normal;
    j["writhe"] = rep.writhe;
    j["odd_writhe"] = rep.odd_writhe ? json(*rep.odd_writhe) : json(nullptr);

    json linking = json::object();
    for (const auto& [pair, val] : rep.linking2) linking[pair_key(pair)] = doubled_json(val);
    j["linking"] = linking;

    j["lk_N"] = rep.lk_n ? json(*rep.lk_n) : json(nullptr);

    if (rep.cover) {
        json cov;
        cov["components"] = rep.cover->components;
        cov["normal"] = rep.cover->normal;
        cov["canonical_cuts"] = rep.used_canonical_cuts;
        json cl = json::object();
        for (const auto& [pair, val] : rep.cover->linking2) {
            std::string key = rep.cover->labels[pair.first] + "," + rep.cover->labels[pair.second];
            cl[key] = doubled_json(val);
        }
        cov["linking"] = cl;
        j["cover"] = cov;
    } else {
        j["cover"] = nullptr;
    }

    json lam = json::object(), nu = json::object();
    for (const auto& [pair, val] : rep.lambda_abs) lam[pair_key(pair)] = val;
    for (const auto& [pair, val] : rep.nu_abs) nu[pair_key(pair)] = val;
    j["lambda_abs"] = rep.lambda_abs.empty() && !rep.even ? json(nullptr) : lam;
    j["nu_abs"] = rep.nu_abs.empty() && !rep.even ? json(nullptr) : nu;

    json q = json::object();
    for (const auto& [pair, vals] : rep.q_sets2)
        q[pair_key(pair)] = json::array({doubled_json(vals[0]), doubled_json(vals[1])});
    j["q_sets"] = q;

    json sp = json::object();
    for (const auto& [i, val] : rep.self_pair2) sp[std::to_string(i + 1)] = doubled_json(val);
    j["self_pair_link"] = sp;

    j["f_polynomial"] = rep.f_poly ? json(rep.f_poly->str()) : json(nullptr);

    return j.dump(2) + "\n";
}

}  // namespace vlink
