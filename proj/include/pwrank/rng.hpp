#pragma once

#include <cmath>
#include <cstdint>

#include "pwrank/normal.hpp"

namespace pwrank {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Derives an independent stream seed from a parent seed and an index.
// Chain calls to key a stream by several indices, e.g.
// substream(substream(seed, kTagEps), rep).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + kGoldenGamma));
}

// Stream tags so that covariates, errors and quantile draws never share a
// substream.
enum : std::uint64_t {
    kTagCovariate = 0x01,
    kTagEps = 0x02,
    kTagQuantZ = 0x03,
    kTagQuantW = 0x04,
    kTagCache = 0x05,
    kTagTest = 0x7E57,
};

// splitmix64. Draw streams are keyed by (seed, index) via substream(), so
// Monte-Carlo results do not depend on thread count or evaluation order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    // Uniform on the open interval (0,1).
    double next_u01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    double next_normal() { return inverse_normal_cdf(next_u01()); }

    double next_cauchy() {
        return std::tan(3.14159265358979323846 * (next_u01() - 0.5));
    }

    // Marsaglia-Tsang; unit scale. Rejection draws stay inside this stream,
    // so parallel callers on distinct substreams remain independent.
    double next_gamma(double shape) {
        if (shape < 1.0) {
            double u = next_u01();
            return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_u01();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double next_chisq(double df) { return 2.0 * next_gamma(0.5 * df); }

private:
    std::uint64_t state_;
};

}  // namespace pwrank
