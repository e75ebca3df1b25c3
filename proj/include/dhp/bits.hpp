#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dhp {

// Vertex subsets on the word-sized side live in a single 64-bit mask.
using mask_t = std::uint64_t;

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t bit(int i) { return mask_t{1} << i; }

inline bool has_bit(mask_t m, int i) { return (m >> i) & mask_t{1}; }

inline mask_t low_mask(int n) {
    return n >= 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

inline int lowest_bit(mask_t m) { return std::countr_zero(m); }

template <typename F>
void for_each_bit(mask_t m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

inline std::vector<int> bits_of(mask_t m) {
    std::vector<int> out;
    for_each_bit(m, [&](int i) { out.push_back(i); });
    return out;
}

inline mask_t mask_of(const std::vector<int>& vs) {
    mask_t m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

} // namespace dhp
