#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "gut/interval.hpp"

namespace gut {

/// A core function of a function family. Must be pure.
using CoreFunction = std::function<double(double)>;

/// Built-in core families.
CoreFunction constant_core(double value);
/// slope * x + intercept
CoreFunction linear_core(double slope, double intercept);
/// coefficients[0] + coefficients[1] x + coefficients[2] x^2 + ...
CoreFunction polynomial_core(std::vector<double> coefficients);

struct Domain {
  double lower = 0.0;
  double upper = 1.0;
};

enum class EnvelopeKind {
  Function,  // cores map into [0, 1]
  Density,   // cores are >= 0, no upper cap
};

/// The family {f : lower(x) <= f(x) <= upper(x)} on a closed domain,
/// represented by its two cores and sampled on a uniform grid.
class GUFunctionEnvelope {
 public:
  static constexpr std::size_t kDefaultGrid = 1025;

  /// Checks lower <= upper (and the kind's range) at every grid point.
  /// Throws Error(Configuration) for a grid below 3 points or an empty domain,
  /// Error(Domain) for a core violating the envelope.
  GUFunctionEnvelope(CoreFunction lower, CoreFunction upper, Domain domain,
                     EnvelopeKind kind = EnvelopeKind::Function, std::size_t grid = kDefaultGrid);

  double lower(double x) const { return lower_(x); }
  double upper(double x) const { return upper_(x); }
  const Domain& domain() const noexcept { return domain_; }
  EnvelopeKind kind() const noexcept { return kind_; }
  std::size_t grid() const noexcept { return grid_; }
  double spacing() const noexcept { return (domain_.upper - domain_.lower) / static_cast<double>(grid_ - 1); }
  bool contains(double x) const noexcept { return x >= domain_.lower && x <= domain_.upper; }

 private:
  CoreFunction lower_;
  CoreFunction upper_;
  Domain domain_;
  EnvelopeKind kind_;
  std::size_t grid_;
};

/// Composite trapezoid rule with `points` nodes over [a, b].
double trapezoid(const CoreFunction& f, double a, double b, std::size_t points);

/// Family-exact expectation bounds of a density envelope: the lower bound
/// integrates x * upper where x < 0 and x * lower where x >= 0, the upper
/// bound the opposite split.
GUInterval density_expectation(const GUFunctionEnvelope& density);

/// [integral of lower, integral of upper] over [a, b] within the domain.
GUInterval integral(const GUFunctionEnvelope& env, double a, double b);
/// [lower(x+dx) - upper(x), upper(x+dx) - lower(x)], dx > 0.
GUInterval variation(const GUFunctionEnvelope& env, double x, double dx);
/// Limits of both cores as the argument approaches x0 on the grid.
GUInterval limit(const GUFunctionEnvelope& env, double x0);
/// [min, max] of the two cores' finite-difference derivatives at x0.
GUInterval derivative(const GUFunctionEnvelope& env, double x0);

enum class CalculusKind { Limit, Variation, Derivative, Integral };

struct Range {
  double from = 0.0;
  double to = 0.0;
};

/// Dispatcher: limit and derivative take a point; integral takes [from, to];
/// variation takes x = from and step = to - from.
GUInterval gu_calculus(CalculusKind kind, const GUFunctionEnvelope& env, std::variant<double, Range> at);

}  // namespace gut
