#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gut/interval.hpp"

namespace gut {

/// Normalization rule applied to the atom partition.
///   Strict:   sum of lefts == sum of rights == 1.
///   Coherent: sum of lefts <= 1 <= sum of rights; composite event measures
///             are clipped into [0, 1].
enum class MeasureMode { Strict, Coherent };

std::string_view to_string(MeasureMode mode) noexcept;
MeasureMode parse_measure_mode(std::string_view text);

/// A subset of the atoms of one space, stored as sorted unique indices.
class Event {
 public:
  Event() = default;
  explicit Event(std::vector<std::size_t> members);
  Event(std::initializer_list<std::size_t> members);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t atom) const;

  friend Event operator&(const Event& lhs, const Event& rhs);
  friend Event operator|(const Event& lhs, const Event& rhs);
  /// Set difference lhs \ rhs.
  friend Event operator-(const Event& lhs, const Event& rhs);
  friend bool operator==(const Event&, const Event&) = default;

 private:
  std::vector<std::size_t> members_;
};

struct SpaceOptions {
  double tolerance = kDefaultTolerance;
  std::size_t max_atoms = 64;
};

/// Outcome of one axiom check run against a candidate space.
struct AxiomCheck {
  std::string axiom;  // "atoms", "nonnegativity", "normalization"
  bool ok = true;
  std::string detail;
};

struct AxiomReport {
  MeasureMode mode = MeasureMode::Coherent;
  std::vector<AxiomCheck> checks;
  double sum_left = 0.0;
  double sum_right = 0.0;

  bool valid() const;
  /// Semicolon-joined details of every failed check.
  std::string violations() const;
};

/// Runs every axiom check without throwing.
AxiomReport check_axioms(const std::vector<std::string>& atoms,
                         const std::vector<GUInterval>& assignment, MeasureMode mode,
                         const SpaceOptions& options = {});

/// Finite generalized uncertain measure space over a partition of atoms.
/// Immutable once built.
class GUMeasureSpace {
 public:
  /// Throws Error(AxiomViolation) listing every failed check.
  GUMeasureSpace(std::vector<std::string> atoms, std::vector<GUInterval> assignment,
                 MeasureMode mode = MeasureMode::Coherent, SpaceOptions options = {});

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<GUInterval>& assignment() const noexcept { return assignment_; }
  MeasureMode mode() const noexcept { return mode_; }
  double tolerance() const noexcept { return options_.tolerance; }

  std::size_t index_of(std::string_view atom) const;
  /// Event from atom names; unknown names throw Error(Domain).
  Event event(const std::vector<std::string>& names) const;
  Event omega() const;

  /// Axiomatic measure: [0,0] for the empty event, [1,1] for the whole
  /// space, otherwise the endpoint sum of the member atoms (clipped into
  /// [0,1] in coherent mode).
  GUInterval measure(const Event& event) const;
  /// Plain endpoint sum over member atoms with no axiomatic override and no
  /// clipping.
  GUInterval raw_measure(const Event& event) const;

  /// G(A|B) = G(AB) / G(B). Throws Error(Conditioning) when G(B) has a zero
  /// endpoint.
  GUInterval conditional(const Event& a, const Event& b) const;

  /// G(A) + G(B) - G(AB) over raw measures.
  GUInterval union_measure(const Event& a, const Event& b) const;

  /// G(AB) == G(A) * G(B) endpoint-wise within tol.
  bool independent(const Event& a, const Event& b, double tol) const;
  bool independent(const Event& a, const Event& b) const { return independent(a, b, tolerance()); }

  /// Scalar measure per atom when every atom has gud within tolerance;
  /// throws Error(NotDegenerate) otherwise.
  std::map<std::string, double> collapse_to_probability() const;

 private:
  void validate(const Event& event) const;

  std::vector<std::string> atoms_;
  std::vector<GUInterval> assignment_;
  MeasureMode mode_;
  SpaceOptions options_;
};

}  // namespace gut
