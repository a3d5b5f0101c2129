#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace legalmkt {

// Deterministic random stream. Draws depend only on the seed material,
// so a per-county stream keyed on (seed, county_id) yields identical
// panels whether counties are generated serially or in parallel.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(splitmix(seed + 0x9e3779b97f4a7c15ULL)) {}

    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : state_(splitmix(splitmix(seed + 0x9e3779b97f4a7c15ULL) ^ (stream_id + 0x853c49e6748fea9bULL))) {}

    std::uint64_t next_u64() {
        // xorshift64* on splitmix-initialized state
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    // Uniform on (0,1), never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    // Standard normal via Box-Muller (no cached spare, keeps the stream
    // position a pure function of the draw count).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mu, double sd) { return mu + sd * normal(); }

    double lognormal(double mu_log, double sd_log) { return std::exp(normal(mu_log, sd_log)); }

    // Poisson by inversion with chunking for larger rates: splits the
    // rate into pieces <= 16 so the sequential search stays exact.
    long poisson(double rate) {
        if (rate < 0.0) throw std::domain_error("poisson: negative rate");
        long total = 0;
        while (rate > 16.0) {
            total += poisson_small(16.0);
            rate -= 16.0;
        }
        total += poisson_small(rate);
        return total;
    }

    long binomial(long n, double p) {
        if (p < 0.0 || p > 1.0) throw std::domain_error("binomial: p outside [0,1]");
        long k = 0;
        for (long i = 0; i < n; ++i) {
            if (uniform() < p) ++k;
        }
        return k;
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    long poisson_small(double rate) {
        if (rate == 0.0) return 0;
        double limit = std::exp(-rate);
        double prod = uniform();
        long k = 0;
        while (prod > limit) {
            prod *= uniform();
            ++k;
        }
        return k;
    }

    std::uint64_t state_;
};

} // namespace legalmkt
