#include "gut/decision.hpp"

#include <cmath>
#include <sstream>

#include "gut/error.hpp"
#include "gut/variables.hpp"

namespace gut {

namespace {

bool dominates(Relation r) { return r == Relation::StronglyGreater || r == Relation::WeaklyGreater; }

std::vector<GUInterval> nature_gums(std::span<const NatureStatus> natures) {
  std::vector<GUInterval> out;
  out.reserve(natures.size());
  for (const auto& n : natures) out.push_back(n.gum);
  return out;
}

}  // namespace

std::string_view to_string(RiskAttitude attitude) noexcept {
  return attitude == RiskAttitude::Averse ? "averse" : "seeking";
}

RiskAttitude parse_risk_attitude(std::string_view text) {
  if (text == "averse") return RiskAttitude::Averse;
  if (text == "seeking") return RiskAttitude::Seeking;
  throw Error(ErrorKind::Configuration, "unknown risk attitude '" + std::string(text) + "'");
}

std::string_view to_string(Rationale rationale) noexcept {
  switch (rationale) {
    case Rationale::StronglyAdvantage: return "StronglyAdvantage";
    case Rationale::WeaklyAdvantage: return "WeaklyAdvantage";
    case Rationale::RiskAverseMinGud: return "RiskAverseMinGud";
    case Rationale::RiskSeekingMaxGud: return "RiskSeekingMaxGud";
  }
  return "?";
}

DecisionProblem::DecisionProblem(std::vector<NatureStatus> natures, std::vector<Scheme> schemes,
                                 std::optional<RiskAttitude> attitude)
    : natures_(std::move(natures)), schemes_(std::move(schemes)), attitude_(attitude) {
  if (natures_.empty()) throw Error(ErrorKind::Domain, "decision problem has no nature statuses");
  if (schemes_.empty()) throw Error(ErrorKind::Domain, "decision problem has no schemes");
  for (const auto& nature : natures_) {
    if (!nature.gum.is_measure_valid()) {
      std::ostringstream os;
      os << "nature status '" << nature.name << "' has " << nature.gum << ", not a subinterval of [0,1]";
      throw Error(ErrorKind::Domain, os.str());
    }
  }
  for (const auto& scheme : schemes_) {
    if (scheme.payoffs.size() != natures_.size()) {
      throw Error(ErrorKind::Domain, "scheme '" + scheme.name + "' has " + std::to_string(scheme.payoffs.size()) +
                                         " payoffs for " + std::to_string(natures_.size()) + " nature statuses");
    }
    for (double p : scheme.payoffs) {
      if (!std::isfinite(p) || p < 0.0) {
        throw Error(ErrorKind::Domain, "scheme '" + scheme.name + "' has a negative or non-finite payoff");
      }
    }
  }
}

DecisionProblem DecisionProblem::with_attitude(std::optional<RiskAttitude> attitude) const {
  return DecisionProblem(natures_, schemes_, attitude);
}

DecisionProblem DecisionProblem::with_scheme(Scheme scheme) const {
  auto schemes = schemes_;
  schemes.push_back(std::move(scheme));
  return DecisionProblem(natures_, std::move(schemes), attitude_);
}

GUInterval geu(std::span<const double> payoffs, std::span<const NatureStatus> natures) {
  if (payoffs.size() != natures.size()) {
    throw Error(ErrorKind::Domain, "geu: " + std::to_string(payoffs.size()) + " payoffs for " +
                                       std::to_string(natures.size()) + " nature statuses");
  }
  for (double p : payoffs) {
    if (!std::isfinite(p) || p < 0.0) throw Error(ErrorKind::Domain, "geu: payoffs must be finite and >= 0");
  }
  const auto gums = nature_gums(natures);
  return expectation(payoffs, std::span<const GUInterval>(gums));
}

RelationMatrix relation_report(const DecisionProblem& problem, double tol) {
  std::vector<GUInterval> geus;
  for (const auto& s : problem.schemes()) geus.push_back(geu(s.payoffs, problem.natures()));
  RelationMatrix matrix(geus.size(), std::vector<Relation>(geus.size(), Relation::Equal));
  for (std::size_t i = 0; i < geus.size(); ++i) {
    for (std::size_t j = i + 1; j < geus.size(); ++j) {
      matrix[i][j] = compare(geus[i], geus[j], tol);
      matrix[j][i] = mirror(matrix[i][j]);
    }
  }
  return matrix;
}

DecisionReport decide(const DecisionProblem& problem, double tol) {
  DecisionReport report;
  const auto& schemes = problem.schemes();
  const std::size_t m = schemes.size();
  for (const auto& s : schemes) {
    report.geus.push_back(geu(s.payoffs, problem.natures()));
    report.guds.push_back(gud(report.geus.back()));
  }
  report.relations = relation_report(problem, tol);

  std::size_t leader = 0;
  for (std::size_t i = 1; i < m; ++i) {
    const auto r = report.relations[i][leader];
    report.comparisons.push_back({i, leader, r});
    if (dominates(r)) leader = i;
  }

  auto finish = [&](std::size_t index, Rationale rationale, std::string note) {
    report.selected = index;
    report.selected_name = schemes[index].name;
    report.rationale = rationale;
    report.note = std::move(note);
    return report;
  };

  auto beats_all = [&](std::size_t i, auto&& accept) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && !accept(report.relations[i][j])) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < m; ++i) {
    if (beats_all(i, [](Relation r) { return r == Relation::StronglyGreater; })) {
      return finish(i, Rationale::StronglyAdvantage,
                    m == 1 ? "single scheme" : "strongly greater than every other scheme");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (beats_all(i, dominates)) {
      return finish(i, Rationale::WeaklyAdvantage, "weakly or strongly greater than every other scheme");
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < m && !dominated; ++j) dominated = j != i && dominates(report.relations[j][i]);
    if (!dominated) report.candidates.push_back(i);
  }
  if (!problem.attitude()) {
    throw Error(ErrorKind::AttitudeRequired,
                "no strongly or weakly advantaged scheme; a risk attitude (averse or seeking) is required");
  }

  const bool averse = *problem.attitude() == RiskAttitude::Averse;
  std::size_t best = report.candidates.front();
  std::size_t ties = 0;
  for (std::size_t c : report.candidates) {
    if (c == best) continue;
    const double diff = report.guds[c] - report.guds[best];
    if (std::abs(diff) <= tol) {
      ++ties;
    } else if (averse ? diff < 0.0 : diff > 0.0) {
      best = c;
      ties = 0;
    }
  }
  std::ostringstream note;
  note << (averse ? "smallest" : "largest") << " uncertainty degree among " << report.candidates.size()
       << " undominated schemes";
  if (ties > 0) note << "; tie broken by lowest scheme index";
  return finish(best, averse ? Rationale::RiskAverseMinGud : Rationale::RiskSeekingMaxGud, note.str());
}

}  // namespace gut
