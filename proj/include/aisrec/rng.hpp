#pragma once

#include <cstdint>
#include <cmath>

namespace ais {

/// Portable seeded generator: xoshiro256** with splitmix64 state expansion.
/// All draw algorithms are fixed here (not delegated to <random>), so a given
/// (seed, call sequence) produces identical streams on every platform:
///   - uniform doubles take the top 53 bits of one 64-bit output;
///   - normal variates use Box-Muller (cosine branch) and consume exactly
///     two uniforms each.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    /// Independent stream for a sample index. Derivation rule: fold the index
    /// into the master seed with a splitmix64 round, then seed normally.
    /// Parallel generators built this way never share state.
    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        std::uint64_t x = master_seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
        return Rng(splitmix64(x));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes two uniforms.
    double normal() {
        // (0,1] for the log argument
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

} // namespace ais
