#include <cmath>

#include <gtest/gtest.h>

#include "gut/decision.hpp"
#include "gut/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gut {
namespace {

std::vector<NatureStatus> table_natures() {
  return {{"Status 1", {0.1, 0.2}}, {"Status 2", {0.2, 0.3}}, {"Status 3", {0.5, 0.7}}};
}

DecisionProblem table1() {
  return DecisionProblem(table_natures(), {{"S1", {100, 80, 90}},
                                           {"S2", {120, 130, 110}},
                                           {"S3", {150, 150, 120}},
                                           {"S4", {160, 90, 140}}});
}

DecisionProblem table2(std::optional<RiskAttitude> attitude) {
  return table1().with_scheme({"S5", {0, 530, 0}}).with_attitude(attitude);
}

void expect_interval(const GUInterval& actual, double left, double right) {
  EXPECT_NEAR(actual.left(), left, 1e-9);
  EXPECT_NEAR(actual.right(), right, 1e-9);
}

TEST(Geu, Examples) {
  const auto natures = table_natures();
  expect_interval(geu(std::vector<double>{100, 80, 90}, natures), 71, 107);
  expect_interval(geu(std::vector<double>{0, 530, 0}, natures), 106, 159);
  EXPECT_EQ(geu(std::vector<double>{0, 0, 0}, natures), GUInterval(0, 0));
}

TEST(Geu, Errors) {
  const auto natures = table_natures();
  EXPECT_THROW(geu(std::vector<double>{1, 2}, natures), Error);
  EXPECT_THROW(geu(std::vector<double>{1, -2, 3}, natures), Error);
  EXPECT_THROW(DecisionProblem(natures, {{"bad", {1, 2}}}), Error);
  EXPECT_THROW(DecisionProblem(natures, {{"neg", {1, -1, 0}}}), Error);
  EXPECT_THROW(DecisionProblem(natures, {}), Error);
  EXPECT_THROW(DecisionProblem({{"N", {0.5, 1.2}}}, {{"S", {1}}}), Error);
}

TEST(Geu, LinearInPayoffs) {
  testing::Gen gen(41);
  const auto natures = table_natures();
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> p(3), q(3), sum(3);
    for (int j = 0; j < 3; ++j) {
      p[j] = static_cast<double>(gen.index(1000));
      q[j] = static_cast<double>(gen.index(1000));
      sum[j] = p[j] + q[j];
    }
    const auto a = geu(p, natures), b = geu(q, natures), s = geu(sum, natures);
    EXPECT_NEAR(s.left(), a.left() + b.left(), 1e-9);
    EXPECT_NEAR(s.right(), a.right() + b.right(), 1e-9);
  }
}

TEST(Decide, Table1SelectsS3) {
  const auto report = decide(table1());
  expect_interval(report.geus[0], 71, 107);
  expect_interval(report.geus[1], 93, 140);
  expect_interval(report.geus[2], 105, 159);
  expect_interval(report.geus[3], 104, 157);
  EXPECT_EQ(report.selected_name, "S3");
  EXPECT_EQ(report.rationale, Rationale::WeaklyAdvantage);
}

TEST(Decide, Table1ComparisonColumn) {
  const auto report = decide(table1());
  ASSERT_EQ(report.comparisons.size(), 3u);
  EXPECT_EQ(report.comparisons[0].against, 0u);
  EXPECT_EQ(report.comparisons[0].relation, Relation::WeaklyGreater);
  EXPECT_EQ(report.comparisons[1].against, 1u);
  EXPECT_EQ(report.comparisons[1].relation, Relation::WeaklyGreater);
  EXPECT_EQ(report.comparisons[2].against, 2u);
  EXPECT_EQ(report.comparisons[2].relation, Relation::WeaklySmaller);
}

TEST(Decide, Table2DependsOnAttitude) {
  const auto averse = decide(table2(RiskAttitude::Averse));
  EXPECT_EQ(averse.selected_name, "S5");
  EXPECT_EQ(averse.rationale, Rationale::RiskAverseMinGud);
  EXPECT_NEAR(averse.guds[4], 53, 1e-9);
  EXPECT_NEAR(averse.guds[2], 54, 1e-9);
  EXPECT_EQ(averse.candidates, (std::vector<std::size_t>{2, 4}));

  const auto seeking = decide(table2(RiskAttitude::Seeking));
  EXPECT_EQ(seeking.selected_name, "S3");
  EXPECT_EQ(seeking.rationale, Rationale::RiskSeekingMaxGud);

  ASSERT_EQ(averse.comparisons.size(), 4u);
  EXPECT_EQ(averse.comparisons[3].index, 4u);
  EXPECT_EQ(averse.comparisons[3].against, 2u);
  EXPECT_EQ(averse.comparisons[3].relation, Relation::PartlySmaller);
}

TEST(Decide, Table2WithoutAttitude) {
  try {
    decide(table2(std::nullopt));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AttitudeRequired);
  }
}

TEST(Decide, SingleScheme) {
  const auto report = decide(DecisionProblem(table_natures(), {{"only", {1, 2, 3}}}));
  EXPECT_EQ(report.selected, 0u);
  EXPECT_EQ(report.rationale, Rationale::StronglyAdvantage);
}

TEST(Decide, EqualGeusFallToRiskStageWithIndexTieBreak) {
  const DecisionProblem problem(table_natures(), {{"A", {10, 10, 10}}, {"B", {10, 10, 10}}}, RiskAttitude::Seeking);
  const auto report = decide(problem);
  EXPECT_EQ(report.selected, 0u);
  EXPECT_NE(report.note.find("tie"), std::string::npos);
}

TEST(Decide, StrongAdvantage) {
  const auto report = decide(DecisionProblem(table_natures(), {{"low", {1, 1, 1}}, {"high", {100, 100, 100}}}));
  EXPECT_EQ(report.selected_name, "high");
  EXPECT_EQ(report.rationale, Rationale::StronglyAdvantage);
}

TEST(RelationReport, Table1And2) {
  const auto m1 = relation_report(table1());
  EXPECT_EQ(m1[1][0], Relation::WeaklyGreater);
  for (std::size_t i = 0; i < m1.size(); ++i) EXPECT_EQ(m1[i][i], Relation::Equal);
  const auto m2 = relation_report(table2(RiskAttitude::Averse));
  EXPECT_EQ(m2[4][2], Relation::PartlySmaller);
  for (std::size_t i = 0; i < m2.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j) EXPECT_EQ(m2[i][j], mirror(m2[j][i]));
}

TEST(Decide, AddingDominatedSchemeKeepsSelection) {
  testing::Gen gen(808);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    const std::size_t n = 2 + gen.index(3), m = 2 + gen.index(4);
    std::vector<NatureStatus> natures;
    const auto masses = gen.coherent_masses(n, 10);
    for (std::size_t j = 0; j < n; ++j) natures.push_back({"N" + std::to_string(j), masses[j]});
    std::vector<Scheme> schemes;
    for (std::size_t i = 0; i < m; ++i) {
      Scheme s{"S" + std::to_string(i), {}};
      for (std::size_t j = 0; j < n; ++j) s.payoffs.push_back(static_cast<double>(gen.index(200)));
      schemes.push_back(s);
    }
    const DecisionProblem problem(natures, schemes, gen.coin() ? RiskAttitude::Averse : RiskAttitude::Seeking);
    const auto before = decide(problem);

    // Shrink every payoff of a random scheme to get a candidate newcomer.
    const std::size_t base = gen.index(m);
    Scheme extra{"X", schemes[base].payoffs};
    for (auto& p : extra.payoffs) p = std::floor(p * gen.uniform(0.5, 1.0));
    const auto extra_geu = geu(extra.payoffs, natures);
    if (compare(extra_geu, before.geus[base]) != Relation::WeaklySmaller) continue;
    ++checked;
    EXPECT_EQ(decide(problem.with_scheme(extra)).selected, before.selected);
  }
  EXPECT_GT(checked, 50);
}

TEST(Decide, DegenerateNaturesMatchClassicalArgmax) {
  testing::Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen.index(5), m = 1 + gen.index(6);
    std::vector<double> p(n);
    double total = 0;
    for (auto& x : p) total += (x = gen.uniform(0.05, 1.0));
    for (auto& x : p) x /= total;
    std::vector<NatureStatus> natures;
    for (std::size_t j = 0; j < n; ++j) natures.push_back({"N", GUInterval::point(p[j])});
    std::vector<Scheme> schemes;
    std::vector<std::vector<double>> payoffs;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> row(n);
      for (auto& a : row) a = gen.uniform(0, 100);
      payoffs.push_back(row);
      schemes.push_back({"S" + std::to_string(i), row});
    }
    const auto report = decide(DecisionProblem(natures, schemes, RiskAttitude::Averse));
    const auto eu = testing::classical_expected_utility(payoffs, p);
    EXPECT_EQ(report.selected, testing::argmax_lowest(eu, kDefaultTolerance));
  }
}

}  // namespace
}  // namespace gut
