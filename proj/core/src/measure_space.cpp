#include "gut/measure_space.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <sstream>

#include "gut/error.hpp"

namespace gut {

namespace {

std::string fmt_number(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

double clip01(double value) { return std::clamp(value, 0.0, 1.0); }

}  // namespace

std::string_view to_string(MeasureMode mode) noexcept {
  return mode == MeasureMode::Strict ? "strict" : "coherent";
}

MeasureMode parse_measure_mode(std::string_view text) {
  if (text == "strict") return MeasureMode::Strict;
  if (text == "coherent") return MeasureMode::Coherent;
  throw Error(ErrorKind::Configuration, "unknown measure mode '" + std::string(text) + "'");
}

Event::Event(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Event::Event(std::initializer_list<std::size_t> members) : Event(std::vector<std::size_t>(members)) {}

bool Event::contains(std::size_t atom) const {
  return std::binary_search(members_.begin(), members_.end(), atom);
}

Event operator&(const Event& lhs, const Event& rhs) {
  std::vector<std::size_t> out;
  std::set_intersection(lhs.members_.begin(), lhs.members_.end(), rhs.members_.begin(),
                        rhs.members_.end(), std::back_inserter(out));
  return Event(std::move(out));
}

Event operator|(const Event& lhs, const Event& rhs) {
  std::vector<std::size_t> out;
  std::set_union(lhs.members_.begin(), lhs.members_.end(), rhs.members_.begin(),
                 rhs.members_.end(), std::back_inserter(out));
  return Event(std::move(out));
}

Event operator-(const Event& lhs, const Event& rhs) {
  std::vector<std::size_t> out;
  std::set_difference(lhs.members_.begin(), lhs.members_.end(), rhs.members_.begin(),
                      rhs.members_.end(), std::back_inserter(out));
  return Event(std::move(out));
}

bool AxiomReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
}

std::string AxiomReport::violations() const {
  std::string out;
  for (const auto& check : checks) {
    if (check.ok) continue;
    if (!out.empty()) out += "; ";
    out += check.axiom + ": " + check.detail;
  }
  return out;
}

AxiomReport check_axioms(const std::vector<std::string>& atoms,
                         const std::vector<GUInterval>& assignment, MeasureMode mode,
                         const SpaceOptions& options) {
  AxiomReport report;
  report.mode = mode;

  AxiomCheck structure{"atoms", true, {}};
  if (atoms.empty()) {
    structure = {"atoms", false, "atom list is empty"};
  } else if (atoms.size() > options.max_atoms) {
    structure = {"atoms", false,
                 std::to_string(atoms.size()) + " atoms exceed the limit of " +
                     std::to_string(options.max_atoms)};
  } else if (std::set<std::string>(atoms.begin(), atoms.end()).size() != atoms.size()) {
    structure = {"atoms", false, "atom identifiers are not distinct"};
  } else if (assignment.size() != atoms.size()) {
    structure = {"atoms", false,
                 std::to_string(assignment.size()) + " intervals assigned to " +
                     std::to_string(atoms.size()) + " atoms"};
  }
  report.checks.push_back(structure);

  AxiomCheck nonnegativity{"nonnegativity", true, {}};
  for (std::size_t i = 0; i < std::min(atoms.size(), assignment.size()); ++i) {
    if (assignment[i].is_measure_valid()) continue;
    std::ostringstream os;
    os << "atom " << atoms[i] << " has " << assignment[i] << ", not a proper subinterval of [0,1]";
    if (!nonnegativity.ok) nonnegativity.detail += ", ";
    nonnegativity.ok = false;
    nonnegativity.detail += os.str();
  }
  report.checks.push_back(nonnegativity);

  for (const auto& interval : assignment) {
    report.sum_left += interval.left();
    report.sum_right += interval.right();
  }

  AxiomCheck normalization{"normalization", true, {}};
  const double tol = options.tolerance;
  const std::string sums = "sum of left endpoints = " + fmt_number(report.sum_left) +
                           ", sum of right endpoints = " + fmt_number(report.sum_right);
  if (mode == MeasureMode::Strict) {
    if (std::abs(report.sum_left - 1.0) > tol || std::abs(report.sum_right - 1.0) > tol) {
      normalization = {"normalization", false, sums + "; strict mode requires both to equal 1"};
    }
  } else if (report.sum_left > 1.0 + tol || report.sum_right < 1.0 - tol) {
    normalization = {"normalization", false,
                     sums + "; coherent mode requires sum left <= 1 <= sum right"};
  }
  if (normalization.ok) normalization.detail = sums;
  report.checks.push_back(normalization);
  return report;
}

GUMeasureSpace::GUMeasureSpace(std::vector<std::string> atoms, std::vector<GUInterval> assignment,
                               MeasureMode mode, SpaceOptions options)
    : atoms_(std::move(atoms)), assignment_(std::move(assignment)), mode_(mode), options_(options) {
  const auto report = check_axioms(atoms_, assignment_, mode_, options_);
  if (!report.valid()) {
    throw Error(ErrorKind::AxiomViolation, "invalid measure space: " + report.violations());
  }
}

std::size_t GUMeasureSpace::index_of(std::string_view atom) const {
  const auto it = std::find(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end()) throw Error(ErrorKind::Domain, "unknown atom '" + std::string(atom) + "'");
  return static_cast<std::size_t>(it - atoms_.begin());
}

Event GUMeasureSpace::event(const std::vector<std::string>& names) const {
  std::vector<std::size_t> members;
  members.reserve(names.size());
  for (const auto& name : names) members.push_back(index_of(name));
  return Event(std::move(members));
}

Event GUMeasureSpace::omega() const {
  std::vector<std::size_t> all(atoms_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Event(std::move(all));
}

void GUMeasureSpace::validate(const Event& event) const {
  if (!event.empty() && event.members().back() >= atoms_.size()) {
    throw Error(ErrorKind::Domain, "event refers to atom index " +
                                       std::to_string(event.members().back()) +
                                       " outside a space of " + std::to_string(atoms_.size()));
  }
}

GUInterval GUMeasureSpace::raw_measure(const Event& event) const {
  validate(event);
  double left = 0.0, right = 0.0;
  for (std::size_t atom : event.members()) {
    left += assignment_[atom].left();
    right += assignment_[atom].right();
  }
  return {left, right};
}

GUInterval GUMeasureSpace::measure(const Event& event) const {
  validate(event);
  if (event.empty()) return {0.0, 0.0};
  if (event.members().size() == atoms_.size()) return {1.0, 1.0};
  const auto sum = raw_measure(event);
  if (mode_ == MeasureMode::Strict) return sum;
  return {clip01(sum.left()), clip01(sum.right())};
}

GUInterval GUMeasureSpace::conditional(const Event& a, const Event& b) const {
  const auto denominator = measure(b);
  if (denominator.left() == 0.0 || denominator.right() == 0.0) {
    std::ostringstream os;
    os << "cannot condition on an event with measure " << denominator;
    throw Error(ErrorKind::Conditioning, os.str());
  }
  return measure(a & b) / denominator;
}

GUInterval GUMeasureSpace::union_measure(const Event& a, const Event& b) const {
  return raw_measure(a) + raw_measure(b) - raw_measure(a & b);
}

bool GUMeasureSpace::independent(const Event& a, const Event& b, double tol) const {
  const auto joint = measure(a & b);
  const auto product = measure(a) * measure(b);
  return std::abs(joint.left() - product.left()) <= tol &&
         std::abs(joint.right() - product.right()) <= tol;
}

std::map<std::string, double> GUMeasureSpace::collapse_to_probability() const {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const double degree = gud(assignment_[i]);
    if (degree > options_.tolerance) {
      throw Error(ErrorKind::NotDegenerate, "atom " + atoms_[i] + " has uncertainty degree " +
                                                fmt_number(degree) + " > 0");
    }
    out.emplace(atoms_[i], assignment_[i].left());
  }
  return out;
}

}  // namespace gut
