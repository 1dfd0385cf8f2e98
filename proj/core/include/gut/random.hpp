#pragma once

#include <cstdint>
#include <random>

namespace gut {

/// Seeded generator with platform-independent draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The std:: distributions are not, so every transform below is
/// written out here.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform01();
  /// Uniform in (0, 1].
  double uniform01_open_low() { return 1.0 - uniform01(); }
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Box-Muller; the spare variate is cached.
  double standard_normal();
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gut
