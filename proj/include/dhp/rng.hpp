#pragma once

#include <cstdint>

namespace dhp {

// Deterministic generator; identical seeds reproduce identical streams on
// every platform, unlike the standard distributions.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // modulo bias is irrelevant at these ranges
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace dhp
