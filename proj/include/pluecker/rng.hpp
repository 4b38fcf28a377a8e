#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace pluecker::numeric {

/// splitmix64 with a Box-Muller layer. Self-contained so that runs are
/// bit-reproducible across platforms and independent of the standard
/// library's distribution implementations.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
        const double theta = 2.0 * std::numbers::pi * uniform01();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        return {re, gaussian()};
    }

private:
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace pluecker::numeric
