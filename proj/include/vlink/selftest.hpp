#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vlink::selftest {

struct SuiteResult {
    std::string id;
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;  // first few failure details
    bool passed() const { return failures == 0; }
};

// The acceptance property suites. cases_override <= 0 runs the full sizes;
// otherwise each randomized suite runs that many cases.
std::vector<SuiteResult> run_acceptance(uint64_t seed, int cases_override = 0);

}  // namespace vlink::selftest
