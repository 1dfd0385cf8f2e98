#include "gut/classing.hpp"

#include "gut/error.hpp"

namespace gut {

std::vector<IndexClass> classify(std::span<const GUInterval> items, double delta) {
  if (!(delta >= 0.0)) throw Error(ErrorKind::Domain, "classify: delta must be >= 0");
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].is_proper()) {
      throw Error(ErrorKind::Domain, "classify: item " + std::to_string(i) + " is an inverse interval");
    }
  }

  std::vector<std::size_t> remaining(items.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::vector<IndexClass> classes;
  while (!remaining.empty()) {
    const std::size_t pivot = remaining.front();
    IndexClass cls{pivot};
    std::vector<std::size_t> rest;
    for (std::size_t pos = 1; pos < remaining.size(); ++pos) {
      const std::size_t candidate = remaining[pos];
      if (delta_neighbour(items[pivot], items[candidate], delta)) {
        cls.push_back(candidate);
      } else {
        rest.push_back(candidate);
      }
    }
    classes.push_back(std::move(cls));
    remaining = std::move(rest);
  }
  return classes;
}

std::vector<GUInterval> lift(std::span<const double> values) {
  std::vector<GUInterval> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(GUInterval::point(v));
  return out;
}

}  // namespace gut
