#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gut/random.hpp"

namespace gut {

enum class DistributionFamily { Normal, Uniform, Exponential };

std::string_view to_string(DistributionFamily family) noexcept;

/// One source distribution for sequence generation. Use the factories; they
/// validate parameters and throw Error(Configuration).
class DistributionSpec {
 public:
  static DistributionSpec normal(double mean, double variance);
  static DistributionSpec uniform(double low, double high);
  static DistributionSpec exponential(double rate);

  DistributionFamily family() const noexcept { return family_; }
  double mean() const noexcept;
  double variance() const noexcept;
  /// Family parameters: (mean, variance), (low, high) or (rate, unused).
  double first() const noexcept { return first_; }
  double second() const noexcept { return second_; }

  double sample(PortableRng& rng) const;

 private:
  DistributionSpec(DistributionFamily family, double first, double second)
      : family_(family), first_(first), second_(second) {}

  DistributionFamily family_;
  double first_;
  double second_;
};

/// Generates k generalized uncertain numbers. For each j in 1..k a row of n
/// draws is produced (draw i from spec i), then one entry of the row is
/// picked uniformly and emitted. Reproducible from `seed`.
std::vector<double> generate_sequence(std::span<const DistributionSpec> specs, std::size_t k,
                                      std::uint64_t seed);

}  // namespace gut
