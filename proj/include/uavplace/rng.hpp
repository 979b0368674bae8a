#pragma once

#include <cstdint>

namespace uavplace {

// splitmix64. Chosen over std::mt19937 so scenarios and seedings can be
// regenerated bit-identically from any language; the README documents the
// exact transition and every draw order that consumes it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1): top 53 bits of the draw scaled by 2^-53. Integer path
    // only, so the value is identical in every conforming implementation.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

private:
    std::uint64_t state_;
};

}  // namespace uavplace
