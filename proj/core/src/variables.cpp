#include "gut/variables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gut/error.hpp"

namespace gut {

namespace {

void validate_masses(const std::vector<GUInterval>& masses, MeasureMode mode, double tol,
                     const char* what) {
  std::vector<std::string> names(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) names[i] = "#" + std::to_string(i);
  SpaceOptions options;
  options.tolerance = tol;
  options.max_atoms = std::max<std::size_t>(masses.size(), options.max_atoms);
  const auto report = check_axioms(names, masses, mode, options);
  if (!report.valid()) {
    throw Error(ErrorKind::AxiomViolation, std::string(what) + ": " + report.violations());
  }
}

}  // namespace

DiscreteGUVariable::DiscreteGUVariable(std::vector<double> values, std::vector<GUInterval> masses,
                                       MeasureMode mode, double tol)
    : values_(std::move(values)), masses_(std::move(masses)) {
  if (values_.size() != masses_.size()) {
    throw Error(ErrorKind::Domain, "discrete variable: " + std::to_string(values_.size()) +
                                       " values but " + std::to_string(masses_.size()) + " masses");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorKind::Construction, "discrete variable: non-finite value");
  }
  validate_masses(masses_, mode, tol, "discrete variable");
}

GUInterval distribution_at(const DiscreteGUVariable& var, double x) {
  double left = 0.0, right = 0.0;
  for (std::size_t i = 0; i < var.size(); ++i) {
    if (var.values()[i] > x) continue;
    left += var.masses()[i].left();
    right += var.masses()[i].right();
  }
  return {left, right};
}

GUInterval expectation(std::span<const double> values, std::span<const GUInterval> masses) {
  if (values.size() != masses.size()) {
    throw Error(ErrorKind::Domain, "expectation: values and masses differ in length");
  }
  double left = 0.0, right = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    left += values[i] * masses[i].left();
    right += values[i] * masses[i].right();
  }
  return {left, right};
}

GUInterval expectation(const DiscreteGUVariable& var) {
  return expectation(std::span<const double>(var.values()), std::span<const GUInterval>(var.masses()));
}

JointDiscreteGUVariable::JointDiscreteGUVariable(std::vector<double> row_values,
                                                 std::vector<double> column_values,
                                                 std::vector<std::vector<GUInterval>> masses,
                                                 MeasureMode mode, double tol)
    : rows_(std::move(row_values)), columns_(std::move(column_values)), masses_(std::move(masses)) {
  if (rows_.empty() || columns_.empty()) throw Error(ErrorKind::Domain, "joint variable: empty support");
  if (masses_.size() != rows_.size()) {
    throw Error(ErrorKind::Domain, "joint variable: mass matrix has " + std::to_string(masses_.size()) +
                                       " rows, expected " + std::to_string(rows_.size()));
  }
  std::vector<GUInterval> flat;
  for (const auto& row : masses_) {
    if (row.size() != columns_.size()) {
      throw Error(ErrorKind::Domain, "joint variable: mass row of length " + std::to_string(row.size()) +
                                         ", expected " + std::to_string(columns_.size()));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  validate_masses(flat, mode, tol, "joint variable");
}

std::vector<GUInterval> JointDiscreteGUVariable::row_marginal() const {
  std::vector<GUInterval> out;
  for (const auto& row : masses_) {
    GUInterval sum;
    for (const auto& m : row) sum = sum + m;
    out.push_back(sum);
  }
  return out;
}

std::vector<GUInterval> JointDiscreteGUVariable::column_marginal() const {
  std::vector<GUInterval> out(columns_.size());
  for (const auto& row : masses_) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = out[j] + row[j];
  }
  return out;
}

OrientedInterval covariance(const JointDiscreteGUVariable& joint) {
  const auto rows = joint.row_marginal();
  const auto cols = joint.column_marginal();
  const auto mean_row = expectation(std::span<const double>(joint.row_values()), std::span<const GUInterval>(rows));
  const auto mean_col =
      expectation(std::span<const double>(joint.column_values()), std::span<const GUInterval>(cols));

  GUInterval total;
  for (std::size_t i = 0; i < joint.row_values().size(); ++i) {
    const auto centered_row = GUInterval::point(joint.row_values()[i]) - mean_row;
    for (std::size_t j = 0; j < joint.column_values().size(); ++j) {
      const auto centered_col = GUInterval::point(joint.column_values()[j]) - mean_col;
      total = total + centered_row * centered_col * joint.mass(i, j);
    }
  }
  return {normalize(total), total.is_inverse()};
}

GUProcess::GUProcess(std::map<double, DiscreteGUVariable> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw Error(ErrorKind::Domain, "process: parameter set is empty");
}

std::vector<double> GUProcess::times() const {
  std::vector<double> out;
  out.reserve(variables_.size());
  for (const auto& [t, _] : variables_) out.push_back(t);
  return out;
}

const DiscreteGUVariable& process_at(const GUProcess& process, double t) {
  const auto it = process.variables().find(t);
  if (it == process.variables().end()) {
    std::ostringstream os;
    os << "process has no variable at t = " << t;
    throw Error(ErrorKind::Lookup, os.str());
  }
  return it->second;
}

LimitEstimate nested_limit(std::span<const GUInterval> sequence, double tol) {
  if (sequence.empty()) throw Error(ErrorKind::Domain, "nested_limit: empty sequence");
  for (const auto& interval : sequence) {
    if (!interval.is_proper()) throw Error(ErrorKind::Domain, "nested_limit: inverse interval in sequence");
  }
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    const auto& outer = sequence[k - 1];
    const auto& inner = sequence[k];
    if (inner.left() < outer.left() || inner.right() > outer.right()) {
      std::ostringstream os;
      os << "nested_limit: interval " << k << ' ' << inner << " is not inside interval " << k - 1 << ' '
         << outer;
      throw NestingError(k, os.str());
    }
  }
  const double first = gud(sequence.front());
  const double last = gud(sequence.back());
  if (last > tol && !(last < first)) {
    std::ostringstream os;
    os << "nested_limit: uncertainty degree does not shrink (first " << first << ", last " << last << ')';
    throw Error(ErrorKind::NoConvergence, os.str());
  }
  const auto& final = sequence.back();
  return {final.left() + 0.5 * (final.right() - final.left()), last};
}

}  // namespace gut
