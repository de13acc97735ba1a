#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tlex {

// Deterministic splitmix64 generator. The standard <random> engines are
// portable but the distributions are implementation-defined, which would
// break byte-identical reruns across toolchains, so the few samplers the
// pipeline needs live here.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    uint64_t uniform_int(uint64_t n) {
        // rejection to avoid modulo bias
        uint64_t threshold = (0ULL - n) % n;
        while (true) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    double normal(double mean = 0.0, double sd = 1.0) {
        // Box-Muller without caching the second deviate
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sd * z;
    }

    // Exact Poisson sampling: Knuth product for small means, Hormann's
    // PTRS transformed rejection otherwise.
    long long poisson(double mean) {
        if (!(mean > 0.0)) return 0;
        if (mean < 10.0) {
            double limit = std::exp(-mean);
            long long k = 0;
            double prod = uniform();
            while (prod > limit) {
                ++k;
                prod *= uniform();
            }
            return k;
        }
        const double slam = std::sqrt(mean);
        const double loglam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        while (true) {
            double u = uniform() - 0.5;
            double v = uniform();
            double us = 0.5 - std::fabs(u);
            long long k = static_cast<long long>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
            if (us >= 0.07 && v <= vr) return k;
            if (k < 0 || (us < 0.013 && v > us)) continue;
            if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
                k * loglam - mean - std::lgamma(static_cast<double>(k) + 1.0))
                return k;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

namespace detail {
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Stable per-stage/per-unit seed derivation: hash(master, tag, index).
// Stage work can then run in any order or in parallel without changing
// any drawn value.
inline uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t index = 0) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    uint64_t z = master;
    z = detail::mix64(z + 0x9e3779b97f4a7c15ULL + h);
    z = detail::mix64(z + 0x9e3779b97f4a7c15ULL + index);
    return z;
}

}  // namespace tlex
