#pragma once

#include <cstdint>

namespace agentbench {

// splitmix64: tiny mixing function used to derive per-episode seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic per-episode seed from (suite seed, task index, run index).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t task_index,
                                 std::uint64_t run_index) {
    return mix64(mix64(base ^ mix64(task_index + 1)) ^ mix64(run_index + 0x51ED270B));
}

// Small deterministic PRNG wrapper. std::uniform_int_distribution output is
// not pinned by the standard, so catalog/world generation uses plain modulo
// draws to keep generated fixtures stable across toolchains.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [0, n). Modulo bias is negligible for the small
    // ranges used here.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }

private:
    std::uint64_t state_;
};

}  // namespace agentbench
