#pragma once

#include <cmath>
#include <cstdint>

namespace gz {

/// splitmix64 output scrambler.
inline std::uint64_t splitmix64_scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for the i-th child stream of a master seed.
///
/// This is the i-th output of a splitmix64 generator started at `master`,
/// computed in O(1). Used to derive per-sample seeds in surveys and
/// Monte Carlo loops so parallel execution cannot change results.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_scramble(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Deterministic RNG: splitmix64 stream with uniform and Gaussian output.
///
/// All randomized operations in the library take an explicit seed or an Rng;
/// there is no global generator state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_scramble(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi], clamped so rounding cannot escape the interval.
    double uniform(double lo, double hi) {
        double u = lo + uniform() * (hi - lo);
        if (u < lo) u = lo;
        if (u > hi) u = hi;
        return u;
    }

    /// Standard normal via Box-Muller (second value cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace gz
