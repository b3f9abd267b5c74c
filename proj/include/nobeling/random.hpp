#pragma once

#include <cstdint>
#include <random>

namespace nobeling {

// Every random choice in the library and tools draws from this engine, seeded
// from a single user-visible seed. The helpers below avoid the standard
// distributions so that sequences agree across standard library vendors.
using Rng = std::mt19937_64;

// Uniform in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Uniform in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Uniform in [0, 1) with 53 bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace nobeling
