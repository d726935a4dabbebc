#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace iotdef {

// Deterministic random stream. std::mt19937_64 emits a fixed, portable
// sequence; the helpers below avoid std::*_distribution, whose mappings
// differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n), rejection-sampled to stay unbiased.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        assert(lo <= hi);
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return real01() < p; }

    bool bit() { return (next_u64() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace iotdef
