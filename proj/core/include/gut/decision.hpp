#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gut/interval.hpp"

namespace gut {

enum class RiskAttitude { Averse, Seeking };

std::string_view to_string(RiskAttitude attitude) noexcept;
RiskAttitude parse_risk_attitude(std::string_view text);

struct NatureStatus {
  std::string name;
  GUInterval gum;
};

struct Scheme {
  std::string name;
  std::vector<double> payoffs;
};

/// Nature statuses with their measure distribution, candidate schemes with
/// one payoff per status, and an optional risk attitude.
class DecisionProblem {
 public:
  /// Throws Error(Domain) for an empty scheme list, a payoff row of the
  /// wrong length, a negative or non-finite payoff, or a nature interval
  /// that is not measure-valid.
  DecisionProblem(std::vector<NatureStatus> natures, std::vector<Scheme> schemes,
                  std::optional<RiskAttitude> attitude = std::nullopt);

  const std::vector<NatureStatus>& natures() const noexcept { return natures_; }
  const std::vector<Scheme>& schemes() const noexcept { return schemes_; }
  const std::optional<RiskAttitude>& attitude() const noexcept { return attitude_; }

  DecisionProblem with_attitude(std::optional<RiskAttitude> attitude) const;
  DecisionProblem with_scheme(Scheme scheme) const;

 private:
  std::vector<NatureStatus> natures_;
  std::vector<Scheme> schemes_;
  std::optional<RiskAttitude> attitude_;
};

/// [sum_j payoff_j * left_j, sum_j payoff_j * right_j].
GUInterval geu(std::span<const double> payoffs, std::span<const NatureStatus> natures);

/// Pairwise relations, matrix[i][j] = compare(GEU_i, GEU_j).
using RelationMatrix = std::vector<std::vector<Relation>>;

RelationMatrix relation_report(const DecisionProblem& problem, double tol = kDefaultTolerance);

enum class Rationale { StronglyAdvantage, WeaklyAdvantage, RiskAverseMinGud, RiskSeekingMaxGud };

std::string_view to_string(Rationale rationale) noexcept;

/// One row of the running-leader comparison column: scheme `index` compared
/// against the best scheme among those listed before it.
struct LeaderComparison {
  std::size_t index = 0;
  std::size_t against = 0;
  Relation relation = Relation::Equal;
};

struct DecisionReport {
  std::vector<GUInterval> geus;
  std::vector<double> guds;
  RelationMatrix relations;
  std::vector<LeaderComparison> comparisons;  // empty entry for the first scheme is omitted
  std::vector<std::size_t> candidates;        // undominated schemes, filled at the risk stage
  std::size_t selected = 0;
  std::string selected_name;
  Rationale rationale = Rationale::StronglyAdvantage;
  std::string note;
};

/// Strong advantage first, then weak advantage, then risk attitude over the
/// undominated schemes (minimum gud when averse, maximum when seeking).
/// Ties at the risk stage go to the lowest scheme index.
/// Throws Error(AttitudeRequired) when the risk stage is reached without an
/// attitude.
DecisionReport decide(const DecisionProblem& problem, double tol = kDefaultTolerance);

}  // namespace gut
