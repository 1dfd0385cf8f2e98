#include "gut/random.hpp"

#include <cmath>
#include <numbers>

namespace gut {

double PortableRng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t PortableRng::below(std::uint64_t bound) {
  // Reject the incomplete top bucket so every residue is equally likely.
  const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

double PortableRng::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform01_open_low()));
  const double angle = 2.0 * std::numbers::pi * uniform01();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

double PortableRng::exponential(double rate) { return -std::log(uniform01_open_low()) / rate; }

}  // namespace gut
