#pragma once

#include <cstdint>

// RNG and index-search pieces shared verbatim by the scalar and SIMD walk
// kernels. Both backends must execute these bit-for-bit identically.

namespace sqwalk::kernels::detail {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Per-chain xorshift128+ state, seeded through splitmix64 so chains are
// decorrelated regardless of how they are batched.
inline void seed_chain(uint64_t seed, uint64_t chain, uint64_t& s0, uint64_t& s1) {
    uint64_t mix = seed ^ (0x632be59bd9b4e019ull * (chain + 1));
    s0 = splitmix64(mix);
    s1 = splitmix64(mix);
    if (s0 == 0 && s1 == 0)
        s1 = 1;
}

inline uint64_t xorshift128plus(uint64_t& s0, uint64_t& s1) {
    uint64_t x = s0;
    const uint64_t y = s1;
    const uint64_t result = x + y;
    s0 = y;
    x ^= x << 23;
    s1 = x ^ y ^ (x >> 17) ^ (y >> 26);
    return result;
}

// Top 52 bits to a double in [0, 1); the integer-to-double conversion is
// exact, so SIMD lanes reproduce it bit-for-bit.
inline double u01(uint64_t bits) {
    return static_cast<double>(bits >> 12) * 0x1.0p-52;
}

// First index with cum[i] > u, clamped to len-1. Branchless binary search:
// the iteration count depends only on len, which keeps SIMD lanes in step.
inline int upper_index(const double* cum, int len, double u) {
    int lo = 0;
    int n = len;
    while (n > 1) {
        int half = n >> 1;
        if (cum[lo + half - 1] <= u)
            lo += half;
        n -= half;
    }
    return lo;
}

} // namespace sqwalk::kernels::detail
