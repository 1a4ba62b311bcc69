// Runs every acceptance criterion at full size and prints one pass/fail
// line per criterion.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "vlink/selftest.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 20240915;
    int cases = 0;  // 0 = full sizes
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        if (arg == "--cases" && i + 1 < argc) cases = std::atoi(argv[++i]);
    }

    auto results = vlink::selftest::run_acceptance(seed, cases);
    bool all_ok = true;
    for (const auto& r : results) {
        bool ok = r.passed();
        all_ok = all_ok && ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " ("
                  << (r.cases - r.failures) << "/" << r.cases << " checks)\n";
        for (const auto& note : r.notes) std::cout << "       " << note << "\n";
    }
    std::cout << (all_ok ? "acceptance: all criteria passed\n"
                         : "acceptance: FAILURES present\n");
    return all_ok ? 0 : 1;
}
