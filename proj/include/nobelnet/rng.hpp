#pragma once

#include <cstdint>

namespace nobelnet {

// splitmix64. Spelled out instead of <random> so that seeded sequences are
// identical across platforms and standard libraries.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix {
    std::uint64_t state = 0;

    constexpr std::uint64_t next() { return mix64(state += kSplitMixGamma); }

    /// Uniform draw in [0, n) by threshold rejection — no modulo bias.
    constexpr std::uint64_t bounded(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    /// Uniform double in [0, 1).
    constexpr double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

/// Seed of the index-th independent subsequence of a master seed: the
/// index-th raw output of a splitmix64 stream, in closed form.
constexpr std::uint64_t subsequence_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * kSplitMixGamma);
}

}  // namespace nobelnet
