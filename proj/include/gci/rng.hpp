#pragma once

#include <cstdint>
#include <random>

namespace gci {

// Draw from [0, n) without std::uniform_int_distribution, whose output is
// implementation-defined; this keeps seeded traces byte-identical across
// standard libraries. Multiply-shift with rejection (Lemire's method).
inline uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
    __uint128_t m = static_cast<__uint128_t>(rng()) * n;
    auto lo = static_cast<uint64_t>(m);
    if (lo < n) {
        uint64_t threshold = (0 - n) % n;
        while (lo < threshold) {
            m = static_cast<__uint128_t>(rng()) * n;
            lo = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

// Derive independent sub-seeds (e.g. generator retry rounds) from one seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace gci
