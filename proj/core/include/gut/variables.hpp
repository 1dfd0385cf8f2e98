#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "gut/interval.hpp"
#include "gut/measure_space.hpp"

namespace gut {

/// Discrete generalized uncertain variable: values x_i with interval masses
/// G(xi = x_i). Values keep their input order and may repeat, since several
/// atoms may map to the same value.
class DiscreteGUVariable {
 public:
  /// Masses must be measure-valid and satisfy the normalization rule of
  /// `mode`; throws Error(AxiomViolation) otherwise.
  DiscreteGUVariable(std::vector<double> values, std::vector<GUInterval> masses,
                     MeasureMode mode = MeasureMode::Coherent, double tol = kDefaultTolerance);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<GUInterval>& masses() const noexcept { return masses_; }

 private:
  std::vector<double> values_;
  std::vector<GUInterval> masses_;
};

/// G(xi <= x): endpoint sum of the masses of every value <= x.
GUInterval distribution_at(const DiscreteGUVariable& var, double x);

/// [sum x_i a_i, sum x_i b_i]. With negative values the result may be
/// inverse-oriented; `is_proper()` on the result is the orientation flag.
GUInterval expectation(const DiscreteGUVariable& var);

/// Same sum over raw spans; shared with the decision engine.
GUInterval expectation(std::span<const double> values, std::span<const GUInterval> masses);

/// An interval normalized to proper orientation, remembering whether the raw
/// result was inverse.
struct OrientedInterval {
  GUInterval interval;
  bool was_inverse = false;
};

/// Two-dimensional discrete variable (xi1, xi2) with a matrix of joint masses
/// indexed [row][column].
class JointDiscreteGUVariable {
 public:
  JointDiscreteGUVariable(std::vector<double> row_values, std::vector<double> column_values,
                          std::vector<std::vector<GUInterval>> masses,
                          MeasureMode mode = MeasureMode::Coherent, double tol = kDefaultTolerance);

  const std::vector<double>& row_values() const noexcept { return rows_; }
  const std::vector<double>& column_values() const noexcept { return columns_; }
  const GUInterval& mass(std::size_t row, std::size_t column) const { return masses_.at(row).at(column); }

  /// Endpoint row / column sums of the joint masses. Not re-validated, since
  /// coherent joints can have marginal masses above 1.
  std::vector<GUInterval> row_marginal() const;
  std::vector<GUInterval> column_marginal() const;

 private:
  std::vector<double> rows_;
  std::vector<double> columns_;
  std::vector<std::vector<GUInterval>> masses_;
};

/// GUE{(xi1 - GUE(xi1)) (xi2 - GUE(xi2))} evaluated with endpoint-wise
/// arithmetic, then normalized.
OrientedInterval covariance(const JointDiscreteGUVariable& joint);

/// Time-indexed family of discrete variables.
class GUProcess {
 public:
  explicit GUProcess(std::map<double, DiscreteGUVariable> variables);

  const std::map<double, DiscreteGUVariable>& variables() const noexcept { return variables_; }
  std::vector<double> times() const;

 private:
  std::map<double, DiscreteGUVariable> variables_;
};

/// Variable at time t; throws Error(Lookup) when t is not a parameter.
const DiscreteGUVariable& process_at(const GUProcess& process, double t);

struct LimitEstimate {
  double value = 0.0;
  double error_bound = 0.0;
};

/// Probability estimate from a closed nested interval sequence: the midpoint
/// of the last interval, with its uncertainty degree as the bound.
/// Throws NestingError when an interval leaves its predecessor, and
/// Error(NoConvergence) when the last gud is above tol and no smaller than
/// the first.
LimitEstimate nested_limit(std::span<const GUInterval> sequence, double tol = kDefaultTolerance);

}  // namespace gut
