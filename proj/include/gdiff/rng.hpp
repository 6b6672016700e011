#pragma once

#include <cstdint>
#include <vector>

namespace gdiff {

/// Deterministic 64-bit generator (splitmix64). One seed fully determines every
/// randomized check in the library, independent of platform or standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (hi <= lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    std::vector<long> uniform_vector(int n, long lo, long hi) {
        std::vector<long> v(static_cast<size_t>(n));
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    std::uint64_t state_;
};

/// Shared knobs for sampled (black-box) checks.
struct SampleParams {
    int n_rand = 64;      // random tuples / elements per check
    long radius = 3;      // coordinate radius for random group elements
    double tol = 1e-8;    // absolute tolerance for numeric comparisons
    int n_points = 32;    // evaluation points per numeric comparison
};

}  // namespace gdiff
