#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "vlink/codec.hpp"
#include "vlink/orientation.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(VLINK_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string scratch_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "vlink_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string write_fixture(const std::string& name, const std::string& text) {
    std::string path = scratch_path(name + ".txt");
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("cli parse echoes the normalized code") {
    auto path = write_fixture("vtx", "O9+  Oa+ V7 # U9+ Ua+ V7 #\n");
    auto res = run_cli("parse " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "O1+ O2+ V1 # U1+ U2+ V1 #\n");
}

TEST_CASE("cli parse reports syntax errors with exit 2") {
    auto path = write_fixture("bad", "O1+ U1\n");
    auto res = run_cli("parse " + path);
    CHECK(res.exit_code == 2);
}

TEST_CASE("cli check reports flags without failing") {
    auto path = write_fixture("vt", "O1+ O2+ U1+ U2+\n");
    auto res = run_cli("check " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "normal=false\ncut_system=false\neven=true\n");

    // A single cut point is a report, not an error.
    auto path1 = write_fixture("onecut", "O1+ # O2+ U1+ U2+\n");
    auto res1 = run_cli("check " + path1);
    CHECK(res1.exit_code == 0);
    CHECK(res1.out.find("cut_system=false") != std::string::npos);
}

TEST_CASE("cli cover output re-parses and is normal") {
    auto path = write_fixture("t3", "O1+ U2+ O3+ U1+ O2+ U3+\n");
    auto res = run_cli("cover " + path + " --cut canonical");
    CHECK(res.exit_code == 0);
    auto cover = vlink::parse(res.out);
    CHECK(vlink::is_normal(cover));
    CHECK(cover.num_components() == 2);
}

TEST_CASE("cli cover rejects canonical mode on a code with cut points") {
    auto path = write_fixture("vtx2", "O1+ O2+ V1 # U1+ U2+ V1 #\n");
    auto res = run_cli("cover " + path + " --cut canonical");
    CHECK(res.exit_code == 1);
}

TEST_CASE("cli invariants emits the report") {
    auto path = write_fixture("vtx3", "O1+ O2+ V1 # U1+ U2+ V1 #\n");
    auto res = run_cli("invariants " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("odd_writhe=2") != std::string::npos);
    CHECK(res.out.find("lk_N=2") != std::string::npos);
    CHECK(res.out.find("normal=false") != std::string::npos);

    auto res_json = run_cli("invariants " + path + " --json");
    CHECK(res_json.exit_code == 0);
    CHECK(res_json.out.find("\"lk_N\": 2") != std::string::npos);
}

TEST_CASE("cli runs are byte-identical") {
    auto path = write_fixture("walkme", "O1+ U2+ O3+ U1+ O2+ U3+\n");
    auto a = run_cli("walk " + path + " --moves 6 --seed 11");
    auto b = run_cli("walk " + path + " --moves 6 --seed 11");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto r1 = run_cli("realize " + path + " --seed 3");
    auto r2 = run_cli("realize " + path + " --seed 3");
    CHECK(r1.out == r2.out);
}

TEST_CASE("cli realize emits svg on request") {
    auto path = write_fixture("vt2", "O1+ O2+ U1+ U2+\n");
    auto svg_path = scratch_path("out.svg");
    auto res = run_cli("realize " + path + " --seed 1 --svg " + svg_path);
    CHECK(res.exit_code == 0);
    std::ifstream svg(svg_path);
    REQUIRE(svg.good());
    std::string first_line;
    std::getline(svg, first_line);
    CHECK(first_line.find("<svg") != std::string::npos);
}
