// Deterministic per-trial random stream. Wraps std::mt19937_64 and maps raw
// bits to doubles directly, so draws do not depend on libstdc++ distribution
// internals and trials replay bit-exactly from a seed.
#pragma once

#include <cstdint>
#include <random>

namespace wormnav {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 eng_;
};

} // namespace wormnav
