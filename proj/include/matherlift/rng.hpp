#pragma once

#include <cstdint>

namespace matherlift {

/// splitmix64: tiny, portable, bit-identical on every platform.
/// All seeded constructions in the library draw from this generator only,
/// so fixed seeds reproduce fixed objects everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [-99, 99]; the modulo bias is irrelevant for
    /// genericity draws and keeps the arithmetic exactly reproducible.
    int small_int() {
        return static_cast<int>(next() % 199ULL) - 99;
    }

    /// Nonzero variant of small_int.
    int small_nonzero_int() {
        int v = small_int();
        while (v == 0) v = small_int();
        return v;
    }

private:
    std::uint64_t state_;
};

/// Deterministic sub-seed for the salt-th retry/substream of a user seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 rng(seed ^ (0x6A09E667F3BCC909ULL * (salt + 1)));
    return rng.next();
}

} // namespace matherlift
