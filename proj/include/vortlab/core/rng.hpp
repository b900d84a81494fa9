#pragma once

#include <cmath>
#include <cstdint>

namespace vortlab {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so runs replay identically regardless of
/// call interleaving across scenario components.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    /// Derive an independent stream (for a named sub-experiment).
    CounterRng fork(std::uint64_t substream) const {
        return CounterRng(seed_, mix_(stream_ ^ 0x9e3779b97f4a7c15ull, substream));
    }

    std::uint64_t next_u64() { return mix_(mix_(seed_, stream_), counter_++); }

    /// Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller (deterministic pairing).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586477 * u2);
        have_spare_ = true;
        return r * std::cos(6.283185307179586477 * u2);
    }

    int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }

  private:
    static std::uint64_t mix_(std::uint64_t a, std::uint64_t b) {
        // splitmix64 finalizer applied to a combined word
        std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_, stream_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Halton low-discrepancy sequence (deterministic space sampling).
inline double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= double(base);
        r += f * double(index % base);
        index /= base;
    }
    return r;
}

}  // namespace vortlab
