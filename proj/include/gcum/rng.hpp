#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace gcum::rng {

/// splitmix64 step: the mixer used to spread one master seed into
/// per-substream seeds.
inline uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of substream `index` under master `seed`: the (index+1)-th output of
/// the splitmix64 sequence started at the master. Stable across platforms.
inline uint64_t stream_seed(uint64_t seed, uint64_t index) {
    uint64_t s = seed + index * 0x9E3779B97F4A7C15ULL;
    uint64_t z = s + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Pinned random stream: mt19937_64 with fixed, portable derivations of
/// uniform/normal/gamma variates. The std <random> distributions are
/// implementation-defined and deliberately not used.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : eng_(seed) {}
    static RngStream substream(uint64_t master_seed, uint64_t index) {
        return RngStream(stream_seed(master_seed, index));
    }

    uint64_t next_u64() { return eng_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller, caching the second variate.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; shapes below 1 use
    /// the boost Gamma(shape+1) * U^{1/shape}.
    double gamma_shape(double shape) {
        if (!(shape > 0.0)) throw std::invalid_argument("gamma_shape: shape must be positive");
        if (shape < 1.0) {
            double u = uniform01();
            while (u <= 0.0) u = uniform01();
            return gamma_shape(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Dirichlet(theta, ..., theta) on the N-simplex via normalized Gammas.
    std::vector<double> dirichlet(double theta, int n) {
        std::vector<double> g(static_cast<size_t>(n));
        double sum = 0.0;
        do {
            sum = 0.0;
            for (auto& x : g) {
                x = gamma_shape(theta);
                sum += x;
            }
        } while (sum <= 0.0);
        for (auto& x : g) x /= sum;
        return g;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace gcum::rng
