#pragma once

#include <cstdint>
#include <random>

namespace amalgam {

/// Seeded source of verification entries. The stream is fully specified (std::mt19937_64 has a
/// standard-mandated output sequence, and the range mapping below avoids the
/// implementation-defined std::uniform_int_distribution), so seeds reproduce across toolchains.
class SeededEntries {
public:
    explicit SeededEntries(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi] by modular reduction of a 64-bit draw (bias < 2^-58 for the
    /// small ranges used here).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    /// Entry for random verification matrices: uniform in [-9, 9].
    std::int64_t entry() { return uniform_int(-9, 9); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent seed for sub-stream `k` (splitmix64 finaliser).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace amalgam
