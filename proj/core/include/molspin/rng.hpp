#pragma once

#include <cmath>
#include <cstdint>

namespace molspin {

/// Counter-based random stream (SplitMix64 applied to seed + counter).
/// The k-th draw depends only on (seed, k), so ensemble members can derive
/// independent substreams deterministically: substream(seed, i) is just
/// CounterRng(seed ^ golden(i)). Every stochastic API in the library takes a
/// mandatory seed and is reproducible bit-for-bit.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    static CounterRng substream(std::uint64_t seed, std::uint64_t index) {
        return CounterRng(mix(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
    }

    std::uint64_t next_u64() { return mix(seed_ + 0x9E3779B97F4A7C15ull * (++counter_)); }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = next_double();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double phi = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t counter_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace molspin
