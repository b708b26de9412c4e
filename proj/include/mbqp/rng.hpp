/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace mbqp {

/// Seeded random source with fully specified draw procedures, so that
/// generated instances are reproducible independent of the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], both inclusive.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(lo + static_cast<std::int64_t>(x % range));
  }

  /// Uniform integer in [lo, hi] excluding zero.
  int nonzero_int(int lo, int hi) {
    int v;
    do {
      v = uniform_int(lo, hi);
    } while (v == 0);
    return v;
  }

  /// Weibull draw by inverse transform.
  double weibull(double shape, double scale) {
    if (shape <= 0 || scale <= 0) throw std::invalid_argument("weibull: parameters must be positive");
    double u;
    do {
      u = uniform01();
    } while (u >= 1.0);
    return scale * std::pow(-std::log(1.0 - u), 1.0 / shape);
  }

  /// Von Mises draw on [0, 2*pi) via the Best-Fisher rejection method.
  double von_mises(double mu, double kappa) {
    if (kappa < 0) throw std::invalid_argument("von_mises: kappa must be nonnegative");
    const double two_pi = 2.0 * M_PI;
    if (kappa < 1e-8) return wrap(mu + two_pi * uniform01());
    const double a = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double b = (a - std::sqrt(2.0 * a)) / (2.0 * kappa);
    const double r = (1.0 + b * b) / (2.0 * b);
    while (true) {
      const double u1 = uniform01();
      const double z = std::cos(M_PI * u1);
      const double f = (1.0 + r * z) / (r + z);
      const double c = kappa * (r - f);
      const double u2 = uniform01();
      if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
        const double u3 = uniform01();
        const double sign = (u3 - 0.5) >= 0.0 ? 1.0 : -1.0;
        return wrap(mu + sign * std::acos(f));
      }
    }
  }

 private:
  static double wrap(double theta) {
    const double two_pi = 2.0 * M_PI;
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    return t;
  }

  std::mt19937_64 gen_;
};

/// Mixes a base seed with stream identifiers (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream_a, std::uint64_t stream_b = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream_a + 1) + 0xbf58476d1ce4e5b9ULL * (stream_b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace mbqp
