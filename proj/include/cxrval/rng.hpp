/**
 * @file rng.hpp
 * @brief Deterministic randomness helpers.
 *
 * Everything here is fixed-algorithm and platform-independent: splitmix64
 * for seeding/hashing, mt19937_64 for streams, and Lemire's multiply-shift
 * for bounded integers (std::uniform_int_distribution is implementation-
 * defined and would break cross-build reproducibility).
 */

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cxrval {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

/// Order-sensitive combine for deriving substreams.
inline constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

inline constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

/// Maps a 64-bit word to [0,1) with 53-bit resolution.
inline constexpr double to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by 128-bit multiply-shift. Deterministic.
inline std::uint64_t bounded(std::uint64_t word, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(word) * static_cast<unsigned __int128>(n)) >> 64);
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return bounded(rng(), n);
}

/// Uniform double in [0,1).
inline double uniform(std::mt19937_64& rng) { return to_unit(rng()); }

/// Uniform double in [lo,hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform(rng);
}

}  // namespace cxrval
