/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace beamsweep {

/// Counter-addressable PRNG built on the splitmix64 finalizer.
///
/// Every Monte Carlo unit of work (a user drop, a detector trial, a sweep
/// cycle) runs on its own substream derived from (seed, salt, index...).
/// Results are therefore independent of how work is partitioned across
/// threads, which is what makes the simulation outputs bit-reproducible
/// at any parallelism degree.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(mix(seed ^ 0x9E3779B97F4A7C15ull)) {}

    /// Child stream at `index`, decorrelated from this stream and from
    /// siblings at other indices.
    Rng fork(uint64_t index) const {
        Rng child(0);
        child.state_ = mix(state_ ^ mix(index + 0x5851F42D4C957F2Dull));
        return child;
    }

    static Rng stream(uint64_t seed, uint64_t salt, uint64_t index) {
        return Rng(seed).fork(salt).fork(index);
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe to feed into log().
    double uniform_pos() { return 1.0 - uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential() { return -std::log(uniform_pos()); }

    /// Standard normal via Box-Muller; the pair partner is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double t = 6.283185307179586476925287 * uniform();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Circularly symmetric complex normal CN(0,1).
    std::complex<double> cnormal() {
        // Direct polar form; does not interact with the normal() cache, so
        // mixed call sequences stay reproducible.
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double t = 6.283185307179586476925287 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang; requires shape >= 1.
    double gamma(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) {
                return d * v;
            }
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
                return d * v;
            }
        }
    }

  private:
    static constexpr uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace beamsweep
