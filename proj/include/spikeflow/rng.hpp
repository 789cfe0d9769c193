#pragma once

#include <cstdint>
#include <random>

namespace spikeflow {

// splitmix64; used to derive independent stream seeds from (base, index) pairs.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return mix_seed(mix_seed(base ^ 0x6a09e667f3bcc908ULL) + mix_seed(a) + 0x9e3779b97f4a7c15ULL * b);
}

// Deterministic RNG. mt19937_64 output and our uniform mapping are fully pinned
// (std::uniform_real_distribution is implementation-defined, so it is avoided).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1): 53 high bits, as in the standard double conversion.
    double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); degenerate ranges return lo.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n), n >= 1; rejection to avoid modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = engine_(); } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace spikeflow
