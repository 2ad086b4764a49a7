#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Deterministic random primitives. std::mt19937_64 is bit-exact across
// platforms, but the standard distributions are not, so every draw that
// influences an output goes through the helpers below.

namespace tempoviz::rng {

using Engine = std::mt19937_64;

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform_unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), n > 0, via rejection sampling (no modulo bias).
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % n;
}

// Fisher-Yates shuffle driven by uniform_index.
template <typename T>
void shuffle(std::vector<T>& values, Engine& eng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_index(eng, i));
        std::swap(values[i - 1], values[j]);
    }
}

// SplitMix64 mix step; used to derive stable per-key randomness.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace tempoviz::rng
