#pragma once

#include <cmath>
#include <cstdint>

#include "errors.hpp"

namespace secord {

namespace detail {
/// 64-bit finalizer with full avalanche (SplitMix64 mixing function).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

/// Counter-based pseudo-random generator. The state is (seed, stream, counter);
/// output i of a stream depends only on those three values, so independent
/// substreams can be split off per sample/trial and the whole sequence is
/// reproducible no matter how work is chunked.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(detail::mix64(detail::mix64(seed) ^ (0x7b1dcdaf1f4ad2e3ULL * (stream + 1)))) {}

    /// Derives an independent generator for sub-task `index` of this stream.
    Rng substream(std::uint64_t index) const {
        Rng r(0);
        r.base_ = detail::mix64(base_ ^ (0xd6e8feb86659fd93ULL * (index + 1)));
        r.counter_ = 0;
        return r;
    }

    std::uint64_t next_u64() { return detail::mix64(base_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform on the open interval (0,1); never returns 0 or 1 exactly.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on (lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

    /// Log-uniform on [lo, hi], lo > 0.
    double next_log_uniform(double lo, double hi) {
        return std::exp(next_uniform(std::log(lo), std::log(hi)));
    }

    /// Standard normal via Box-Muller.
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    /// Unit-mean exponential.
    double next_exponential() { return -std::log(next_uniform()); }

    /// Gamma(shape, rate) via Marsaglia-Tsang squeeze (with the boost trick for
    /// shape < 1).
    double next_gamma(double shape, double rate) {
        if (!(shape > 0.0) || !(rate > 0.0))
            raise(errc::invalid_config, "gamma sampling requires shape > 0 and rate > 0");
        if (shape < 1.0) {
            const double u = next_uniform();
            return next_gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = next_uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
        }
    }

  private:
    std::uint64_t base_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace secord
