#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vlink {

// Deterministic random helper; avoids std distributions so identical seeds
// give identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }
    bool coin() { return (next() & 1) != 0; }
    int pick_sign() { return coin() ? +1 : -1; }
    uint64_t derive() { return next() ^ 0x9e3779b97f4a7c15ull; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace vlink
