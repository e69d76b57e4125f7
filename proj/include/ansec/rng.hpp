#pragma once

#include <cmath>
#include <cstdint>

namespace ansec::montecarlo {

// splitmix64 step; used only to expand seeds into xoshiro state.
inline std::uint64_t splitmix64_next(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman/Vigna). Small, fast, 256-bit state; plenty for
// per-trial substreams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_)
            w = splitmix64_next(s);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on (0,1]: 53-bit mantissa, never 0 so logs are safe.
    double uniform() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Unit-mean exponential.
    double expo() { return -std::log(uniform()); }

    // Standard normal via Box-Muller, second deviate cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double rr = std::sqrt(-2.0 * std::log(uniform()));
        double a = 2.0 * M_PI * uniform();
        cached_ = rr * std::sin(a);
        has_cached_ = true;
        return rr * std::cos(a);
    }

    // Gamma(m, 1) for integer m as -log of uniform products, chunked so the
    // running product stays far from the double underflow edge.
    double gamma_int(int m) {
        double total = 0.0;
        while (m > 0) {
            int chunk = m < 10 ? m : 10;
            double prod = 1.0;
            for (int i = 0; i < chunk; ++i)
                prod *= uniform();
            total -= std::log(prod);
            m -= chunk;
        }
        return total;
    }

    // Poisson by inversion of exponential gaps (Knuth). Means above 500 are
    // split additively so exp(-mean) stays representable.
    long poisson(double mean) {
        long total = 0;
        while (mean > 500.0) {
            total += poisson_small(500.0);
            mean -= 500.0;
        }
        return total + poisson_small(mean);
    }

private:
    long poisson_small(double mean) {
        if (mean <= 0.0)
            return 0;
        double limit = std::exp(-mean);
        long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    bool has_cached_ = false;
    double cached_ = 0.0;
};

// Independent substream for one trial: the base seed is displaced by a
// fixed odd multiplier of (index+1) before the splitmix expansion, so the
// stream depends only on (seed, index), never on scheduling.
inline Rng trial_rng(std::uint64_t base_seed, std::uint64_t trial_index) {
    return Rng(base_seed + 0x9E3779B97F4A7C15ull * (trial_index + 1));
}

} // namespace ansec::montecarlo
