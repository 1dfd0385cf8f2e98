#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gut/interval.hpp"

namespace gut {

/// Indices into the input, pivot first, remaining members in input order.
using IndexClass = std::vector<std::size_t>;

/// Plain fast delta-neighbour classing. The first surviving item is the
/// pivot; every surviving item within delta of the pivot joins its class.
/// Members are pivot-relative neighbours, not pairwise neighbours.
/// Throws Error(Domain) on negative delta or an inverse item.
std::vector<IndexClass> classify(std::span<const GUInterval> items, double delta);

/// Lifts scalars to degenerate intervals [x, x].
std::vector<GUInterval> lift(std::span<const double> values);

}  // namespace gut
