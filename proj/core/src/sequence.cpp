#include "gut/sequence.hpp"

#include <cmath>

#include "gut/error.hpp"

namespace gut {

std::string_view to_string(DistributionFamily family) noexcept {
  switch (family) {
    case DistributionFamily::Normal: return "normal";
    case DistributionFamily::Uniform: return "uniform";
    case DistributionFamily::Exponential: return "exponential";
  }
  return "?";
}

DistributionSpec DistributionSpec::normal(double mean, double variance) {
  if (!std::isfinite(mean) || !std::isfinite(variance) || !(variance > 0.0)) {
    throw Error(ErrorKind::Configuration, "normal distribution needs a finite mean and variance > 0");
  }
  return {DistributionFamily::Normal, mean, variance};
}

DistributionSpec DistributionSpec::uniform(double low, double high) {
  if (!std::isfinite(low) || !std::isfinite(high) || !(low < high)) {
    throw Error(ErrorKind::Configuration, "uniform distribution needs finite bounds with low < high");
  }
  return {DistributionFamily::Uniform, low, high};
}

DistributionSpec DistributionSpec::exponential(double rate) {
  if (!std::isfinite(rate) || !(rate > 0.0)) {
    throw Error(ErrorKind::Configuration, "exponential distribution needs a finite rate > 0");
  }
  return {DistributionFamily::Exponential, rate, 0.0};
}

double DistributionSpec::mean() const noexcept {
  switch (family_) {
    case DistributionFamily::Normal: return first_;
    case DistributionFamily::Uniform: return 0.5 * (first_ + second_);
    case DistributionFamily::Exponential: return 1.0 / first_;
  }
  return 0.0;
}

double DistributionSpec::variance() const noexcept {
  switch (family_) {
    case DistributionFamily::Normal: return second_;
    case DistributionFamily::Uniform: return (second_ - first_) * (second_ - first_) / 12.0;
    case DistributionFamily::Exponential: return 1.0 / (first_ * first_);
  }
  return 0.0;
}

double DistributionSpec::sample(PortableRng& rng) const {
  switch (family_) {
    case DistributionFamily::Normal: return first_ + std::sqrt(second_) * rng.standard_normal();
    case DistributionFamily::Uniform: return first_ + (second_ - first_) * rng.uniform01();
    case DistributionFamily::Exponential: return rng.exponential(first_);
  }
  return 0.0;
}

std::vector<double> generate_sequence(std::span<const DistributionSpec> specs, std::size_t k,
                                      std::uint64_t seed) {
  if (specs.empty()) throw Error(ErrorKind::Configuration, "generate_sequence: no distributions given");
  if (k == 0) throw Error(ErrorKind::Configuration, "generate_sequence: k must be positive");

  PortableRng rng(seed);
  std::vector<double> row(specs.size());
  std::vector<double> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < specs.size(); ++i) row[i] = specs[i].sample(rng);
    out.push_back(row[rng.below(specs.size())]);
  }
  return out;
}

}  // namespace gut
