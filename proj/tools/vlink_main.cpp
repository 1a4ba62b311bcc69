#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vlink/codec.hpp"
#include "vlink/covering.hpp"
#include "vlink/errors.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/orientation.hpp"
#include "vlink/realize.hpp"
#include "vlink/selftest.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitSyntax = 2;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vlink::SyntaxError(0, 0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vlink::SyntaxError(0, 0, "cannot write " + path);
    out << data;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

void print_report_text(const vlink::InvariantReport& rep, std::ostream& out) {
    out << "components=" << rep.components << "\n";
    out << "even=" << bool_word(rep.even) << "\n";
    out << "normal=" << bool_word(rep.normal) << "\n";
    out << "writhe=" << rep.writhe << "\n";
    if (rep.odd_writhe) out << "odd_writhe=" << *rep.odd_writhe << "\n";
    for (const auto& [pair, val] : rep.linking2)
        out << "linking[" << pair.first + 1 << "," << pair.second + 1
            << "]=" << vlink::format_doubled(val) << "\n";
    if (rep.lk_n) out << "lk_N=" << *rep.lk_n << "\n";
    if (rep.cover) {
        out << "cover.components=" << rep.cover->components << "\n";
        out << "cover.normal=" << bool_word(rep.cover->normal) << "\n";
        for (const auto& [pair, val] : rep.cover->linking2)
            out << "cover.linking[" << rep.cover->labels[pair.first] << ","
                << rep.cover->labels[pair.second] << "]=" << vlink::format_doubled(val) << "\n";
    }
    for (const auto& [pair, val] : rep.lambda_abs)
        out << "lambda_abs[" << pair.first + 1 << "," << pair.second + 1 << "]=" << val << "\n";
    for (const auto& [pair, val] : rep.nu_abs)
        out << "nu_abs[" << pair.first + 1 << "," << pair.second + 1 << "]=" << val << "\n";
    for (const auto& [pair, vals] : rep.q_sets2)
        out << "q_set[" << pair.first + 1 << "," << pair.second + 1 << "]={"
            << vlink::format_doubled(vals[0]) << "," << vlink::format_doubled(vals[1]) << "}\n";
    for (const auto& [i, val] : rep.self_pair2)
        out << "self_pair_link[" << i + 1 << "]=" << vlink::format_doubled(val) << "\n";
    if (rep.f_poly) out << "f_polynomial=" << rep.f_poly->str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended Gauss codes, coherent double coverings, and their invariants"};
    app.require_subcommand(1);

    std::string file, out_path, svg_path, cut_mode = "auto";
    uint64_t seed = 0;
    int moves = 0, cases = 0;
    bool json = false, cut_walk = false;

    auto* cmd_parse = app.add_subcommand("parse", "validate a code file and echo it normalized");
    cmd_parse->add_option("file", file)->required();

    auto* cmd_check = app.add_subcommand("check", "report normality, cut system, evenness");
    cmd_check->add_option("file", file)->required();

    auto* cmd_realize = app.add_subcommand("realize", "place virtual crossings for a plain code");
    cmd_realize->add_option("file", file)->required();
    cmd_realize->add_option("--seed", seed);
    cmd_realize->add_option("--svg", svg_path);

    auto* cmd_cover = app.add_subcommand("cover", "write the coherent double covering");
    cmd_cover->add_option("file", file)->required();
    cmd_cover->add_option("--cut", cut_mode)
        ->check(CLI::IsMember({"auto", "canonical", "inline"}));
    cmd_cover->add_option("--out", out_path);

    auto* cmd_inv = app.add_subcommand("invariants", "compute the invariant report");
    cmd_inv->add_option("file", file)->required();
    cmd_inv->add_flag("--json", json);

    auto* cmd_walk = app.add_subcommand("walk", "apply a random move sequence");
    cmd_walk->add_option("file", file)->required();
    cmd_walk->add_option("--moves", moves)->required();
    cmd_walk->add_option("--seed", seed);
    cmd_walk->add_flag("--cut-moves", cut_walk);

    auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance property suites");
    cmd_selftest->add_option("--cases", cases);
    cmd_selftest->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed()) {
            auto code = vlink::parse(read_file(file));
            std::cout << vlink::serialize(code);
            return 0;
        }
        if (cmd_check->parsed()) {
            auto code = vlink::parse(read_file(file));
            std::cout << "normal=" << bool_word(vlink::is_normal(code)) << "\n";
            std::cout << "cut_system=" << bool_word(vlink::is_cut_system(code)) << "\n";
            std::cout << "even=" << bool_word(vlink::is_even(code).even) << "\n";
            return 0;
        }
        if (cmd_realize->parsed()) {
            auto code = vlink::parse(read_file(file));
            auto r = vlink::realize(code, seed);
            if (!svg_path.empty()) write_file(svg_path, vlink::layout_svg(r));
            std::cout << vlink::serialize(r.code);
            return 0;
        }
        if (cmd_cover->parsed()) {
            auto code = vlink::parse(read_file(file));
            if (cut_mode == "auto") cut_mode = code.has_cuts() ? "inline" : "canonical";
            vlink::CoverCode cover;
            if (cut_mode == "canonical")
                cover = vlink::canonical_cover(code);
            else
                cover = vlink::coherent_double_cover(code);
            std::string text = vlink::serialize(cover.code);
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            return 0;
        }
        if (cmd_inv->parsed()) {
            auto code = vlink::parse(read_file(file));
            auto rep = vlink::compute_report(code);
            if (json)
                std::cout << vlink::emit_report(rep);
            else
                print_report_text(rep, std::cout);
            return 0;
        }
        if (cmd_walk->parsed()) {
            auto code = vlink::parse(read_file(file));
            vlink::WalkOptions opts;
            opts.cut_moves = cut_walk;
            auto res = vlink::random_walk(code, moves, seed, opts);
            for (const auto& mi : res.trace) std::cerr << mi.describe() << "\n";
            std::cout << vlink::serialize(res.code);
            return 0;
        }
        if (cmd_selftest->parsed()) {
            auto results = vlink::selftest::run_acceptance(seed, cases);
            bool all_ok = true;
            for (const auto& r : results) {
                bool ok = r.passed();
                all_ok = all_ok && ok;
                std::cout << (ok ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " ("
                          << r.cases - r.failures << "/" << r.cases << ")\n";
                for (const auto& note : r.notes) std::cout << "       " << note << "\n";
            }
            return all_ok ? 0 : kExitDomain;
        }
    } catch (const vlink::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const vlink::DomainError& e) {
        if (e.fault() == vlink::Fault::InvalidCode) {
            std::cerr << "error: invalid code: " << e.what() << "\n";
            return kExitSyntax;
        }
        std::cerr << "error: " << vlink::fault_name(e.fault()) << ": " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
