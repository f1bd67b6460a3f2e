#pragma once

// Deterministic random draws on top of std::mt19937_64. The engine itself is
// fully specified by the standard; the distributions are not, so every draw
// the project depends on for reproducibility goes through the helpers here.

#include <cstdint>
#include <random>
#include <vector>

namespace coursenet {

// Uniform integer in [0, n). Rejection sampling, no modulo bias.
inline std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double rng_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle using rng_below, so the permutation depends only on
// the engine state and not on the standard library in use.
template <typename T>
void shuffle_deterministic(std::vector<T>& values, std::mt19937_64& gen) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng_below(gen, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace coursenet
