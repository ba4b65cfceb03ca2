#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vmi {

// Seeded random stream with explicit variate recipes. mt19937_64 output is
// fixed by the standard and the transforms below avoid std::*_distribution,
// whose results differ between standard library implementations. Identical
// seeds therefore produce identical streams on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Derive an independent child stream, e.g. per agent or per shard.
    static RandomStream child(std::uint64_t seed, std::uint64_t index) {
        return RandomStream(mix(seed, index));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1]; never returns 0, so log() is safe.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Multiply-shift; bias is < 2^-64 per draw, irrelevant at our scale.
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // Standard normal via Box-Muller. Pairs are cached so consecutive calls
    // consume engine output at a deterministic rate.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 over (seed ^ rotated index)
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace vmi
