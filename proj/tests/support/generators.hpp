#pragma once

// Hand-rolled random generators for property tests. Everything is seeded so
// a failing case can be replayed from the printed seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gut/interval.hpp"

namespace gut::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  GUInterval proper(double lo = 0.0, double hi = 1.0) {
    double a = uniform(lo, hi), b = uniform(lo, hi);
    if (a > b) std::swap(a, b);
    return {a, b};
  }

  /// Multiple of 2^-bits in [0, 1]; sums of these are exact in double.
  double dyadic(int bits = 16) {
    const auto scale = std::ldexp(1.0, bits);
    return static_cast<double>(std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(scale))(rng_)) /
           scale;
  }

  /// Uniform multiple of 2^-53 in [0, 1): the grid a uniform double lives on.
  double unit53() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  /// Proper pairs with frequent shared endpoints, touching intervals and
  /// degenerate points.
  std::pair<GUInterval, GUInterval> boundary_pair() {
    auto i1 = proper();
    auto i2 = proper();
    switch (index(6)) {
      case 0: i2 = GUInterval(i1.left(), std::max(i1.left(), i2.right())); break;
      case 1: i2 = GUInterval(std::min(i2.left(), i1.right()), i1.right()); break;
      case 2: i2 = GUInterval(i1.right(), std::max(i1.right(), i2.right())); break;
      case 3: i2 = i1; break;
      case 4: i1 = GUInterval::point(i1.left()); break;
      default: break;
    }
    return {i1, i2};
  }

  /// Random coherent atom masses, sum left <= 1 <= sum right, snapped to a
  /// 2^-bits grid (bits = 0 leaves them unsnapped).
  std::vector<GUInterval> coherent_masses(std::size_t n, int bits = 16) {
    for (;;) {
      std::vector<double> p(n);
      double total = 0.0;
      for (auto& x : p) total += (x = uniform(0.05, 1.0));
      std::vector<GUInterval> out;
      double sl = 0.0, sr = 0.0;
      const auto scale = std::ldexp(1.0, bits);
      for (double x : p) {
        const double centre = x / total;
        double lo = std::max(0.0, centre - uniform(0.0, 0.2));
        double hi = std::min(1.0, centre + uniform(0.0, 0.2));
        if (bits > 0) {
          lo = std::floor(lo * scale) / scale;
          hi = std::ceil(hi * scale) / scale;
        }
        // Occasionally pin the lower endpoint at zero.
        out.emplace_back(coin(0.15) ? 0.0 : lo, hi);
        sl += out.back().left();
        sr += out.back().right();
      }
      if (sl <= 1.0 && sr >= 1.0) return out;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gut::testing
