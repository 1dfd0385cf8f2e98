#include "gut/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gut/error.hpp"

namespace gut {

namespace {

void require_inside(const GUFunctionEnvelope& env, double x, const char* op) {
  if (!std::isfinite(x) || !env.contains(x)) {
    std::ostringstream os;
    os << op << ": point " << x << " outside domain [" << env.domain().lower << ',' << env.domain().upper
       << ']';
    throw Error(ErrorKind::Domain, os.str());
  }
}

// Second-order finite difference at grid spacing; one-sided near the ends.
double finite_difference(const CoreFunction& f, const GUFunctionEnvelope& env, double x) {
  const double lo = env.domain().lower, hi = env.domain().upper;
  double h = env.spacing();
  if (x - h >= lo && x + h <= hi) return (f(x + h) - f(x - h)) / (2.0 * h);
  if (x - lo < hi - x) {
    h = std::min(h, (hi - x) / 2.0);
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
  }
  h = std::min(h, (x - lo) / 2.0);
  return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
}

// Grid approach to x0 with one Richardson step.
double approach(const CoreFunction& f, const GUFunctionEnvelope& env, double x0) {
  const double lo = env.domain().lower, hi = env.domain().upper;
  const double h = env.spacing();
  if (x0 - h >= lo && x0 + h <= hi) {
    const double coarse = 0.5 * (f(x0 - h) + f(x0 + h));
    const double fine = 0.5 * (f(x0 - h / 2.0) + f(x0 + h / 2.0));
    return (4.0 * fine - coarse) / 3.0;
  }
  // One-sided toward the roomier side; error is first order in h.
  const double sign = (hi - x0 >= x0 - lo) ? 1.0 : -1.0;
  const double step = std::min(h, std::max(hi - x0, x0 - lo));
  const double coarse = f(x0 + sign * step);
  const double fine = f(x0 + sign * step / 2.0);
  return 2.0 * fine - coarse;
}

}  // namespace

CoreFunction constant_core(double value) {
  return [value](double) { return value; };
}

CoreFunction linear_core(double slope, double intercept) {
  return [slope, intercept](double x) { return slope * x + intercept; };
}

CoreFunction polynomial_core(std::vector<double> coefficients) {
  return [c = std::move(coefficients)](double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
}

GUFunctionEnvelope::GUFunctionEnvelope(CoreFunction lower, CoreFunction upper, Domain domain,
                                       EnvelopeKind kind, std::size_t grid)
    : lower_(std::move(lower)), upper_(std::move(upper)), domain_(domain), kind_(kind), grid_(grid) {
  if (grid_ < 3) {
    throw Error(ErrorKind::Configuration, "envelope grid needs at least 3 points, got " + std::to_string(grid_));
  }
  if (!std::isfinite(domain_.lower) || !std::isfinite(domain_.upper) || !(domain_.lower < domain_.upper)) {
    throw Error(ErrorKind::Configuration, "envelope domain must be a finite interval with lower < upper");
  }
  if (!lower_ || !upper_) throw Error(ErrorKind::Configuration, "envelope cores must be callable");

  const double h = spacing();
  for (std::size_t i = 0; i < grid_; ++i) {
    const double x = (i + 1 == grid_) ? domain_.upper : domain_.lower + static_cast<double>(i) * h;
    const double f1 = lower_(x), f2 = upper_(x);
    std::string problem;
    if (!std::isfinite(f1) || !std::isfinite(f2)) {
      problem = "non-finite core value";
    } else if (f1 > f2) {
      problem = "lower core exceeds upper core";
    } else if (f1 < 0.0) {
      problem = "core is negative";
    } else if (kind_ == EnvelopeKind::Function && f2 > 1.0) {
      problem = "core exceeds 1";
    }
    if (!problem.empty()) {
      std::ostringstream os;
      os << "envelope: " << problem << " at x = " << x << " (lower " << f1 << ", upper " << f2 << ')';
      throw Error(ErrorKind::Domain, os.str());
    }
  }
}

double trapezoid(const CoreFunction& f, double a, double b, std::size_t points) {
  if (points < 2) throw Error(ErrorKind::Configuration, "trapezoid needs at least 2 points");
  if (a == b) return 0.0;
  const double h = (b - a) / static_cast<double>(points - 1);
  double sum = 0.5 * (f(a) + f(b));
  for (std::size_t i = 1; i + 1 < points; ++i) sum += f(a + static_cast<double>(i) * h);
  return sum * h;
}

GUInterval density_expectation(const GUFunctionEnvelope& density) {
  const auto lo = density.domain().lower, hi = density.domain().upper;
  const auto low_integrand = [&density](double x) {
    return x < 0.0 ? x * density.upper(x) : x * density.lower(x);
  };
  const auto high_integrand = [&density](double x) {
    return x < 0.0 ? x * density.lower(x) : x * density.upper(x);
  };
  return {trapezoid(low_integrand, lo, hi, density.grid()), trapezoid(high_integrand, lo, hi, density.grid())};
}

GUInterval integral(const GUFunctionEnvelope& env, double a, double b) {
  require_inside(env, a, "integral");
  require_inside(env, b, "integral");
  const CoreFunction f1 = [&env](double x) { return env.lower(x); };
  const CoreFunction f2 = [&env](double x) { return env.upper(x); };
  return {trapezoid(f1, a, b, env.grid()), trapezoid(f2, a, b, env.grid())};
}

GUInterval variation(const GUFunctionEnvelope& env, double x, double dx) {
  if (!(dx > 0.0)) throw Error(ErrorKind::Domain, "variation: step must be positive");
  require_inside(env, x, "variation");
  require_inside(env, x + dx, "variation");
  return {env.lower(x + dx) - env.upper(x), env.upper(x + dx) - env.lower(x)};
}

GUInterval limit(const GUFunctionEnvelope& env, double x0) {
  require_inside(env, x0, "limit");
  const CoreFunction f1 = [&env](double x) { return env.lower(x); };
  const CoreFunction f2 = [&env](double x) { return env.upper(x); };
  const double l1 = approach(f1, env, x0), l2 = approach(f2, env, x0);
  return {std::min(l1, l2), std::max(l1, l2)};
}

GUInterval derivative(const GUFunctionEnvelope& env, double x0) {
  require_inside(env, x0, "derivative");
  const CoreFunction f1 = [&env](double x) { return env.lower(x); };
  const CoreFunction f2 = [&env](double x) { return env.upper(x); };
  const double d1 = finite_difference(f1, env, x0), d2 = finite_difference(f2, env, x0);
  return {std::min(d1, d2), std::max(d1, d2)};
}

GUInterval gu_calculus(CalculusKind kind, const GUFunctionEnvelope& env, std::variant<double, Range> at) {
  const bool is_point = std::holds_alternative<double>(at);
  switch (kind) {
    case CalculusKind::Limit:
    case CalculusKind::Derivative: {
      if (!is_point) throw Error(ErrorKind::Domain, "limit and derivative take a point");
      const double x = std::get<double>(at);
      return kind == CalculusKind::Limit ? limit(env, x) : derivative(env, x);
    }
    case CalculusKind::Integral:
    case CalculusKind::Variation: {
      if (is_point) throw Error(ErrorKind::Domain, "integral and variation take a range");
      const auto range = std::get<Range>(at);
      return kind == CalculusKind::Integral ? integral(env, range.from, range.to)
                                            : variation(env, range.from, range.to - range.from);
    }
  }
  throw Error(ErrorKind::Domain, "unknown calculus kind");
}

}  // namespace gut
