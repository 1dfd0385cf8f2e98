#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gut/gut.hpp"

namespace {

std::vector<gut::NatureStatus> natures() {
  return {{"Status 1", {0.1, 0.2}}, {"Status 2", {0.2, 0.3}}, {"Status 3", {0.5, 0.7}}};
}

void BM_DecideTable2(benchmark::State& state) {
  const gut::DecisionProblem problem(natures(),
                                     {{"S1", {100, 80, 90}},
                                      {"S2", {120, 130, 110}},
                                      {"S3", {150, 150, 120}},
                                      {"S4", {160, 90, 140}},
                                      {"S5", {0, 530, 0}}},
                                     gut::RiskAttitude::Averse);
  for (auto _ : state) benchmark::DoNotOptimize(gut::decide(problem));
}
BENCHMARK(BM_DecideTable2);

void BM_DecideRandom(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> payoff(0, 500);
  std::vector<gut::Scheme> schemes;
  for (std::size_t i = 0; i < m; ++i) schemes.push_back({"S" + std::to_string(i), {payoff(rng), payoff(rng), payoff(rng)}});
  const gut::DecisionProblem problem(natures(), schemes, gut::RiskAttitude::Averse);
  for (auto _ : state) benchmark::DoNotOptimize(gut::decide(problem));
}
BENCHMARK(BM_DecideRandom)->Arg(8)->Arg(64)->Arg(256);

void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<gut::GUInterval> items;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = u(rng);
    items.emplace_back(a, a + 0.1 * u(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(gut::classify(items, 0.05));
}
BENCHMARK(BM_Classify)->Arg(100)->Arg(1000)->Arg(10000);

void BM_GenerateSequence(benchmark::State& state) {
  const std::vector specs{gut::DistributionSpec::normal(0, 1), gut::DistributionSpec::uniform(5, 15),
                          gut::DistributionSpec::exponential(0.5)};
  for (auto _ : state) benchmark::DoNotOptimize(gut::generate_sequence(specs, static_cast<std::size_t>(state.range(0)), 42));
}
BENCHMARK(BM_GenerateSequence)->Arg(1000)->Arg(100000);

void BM_DensityExpectation(benchmark::State& state) {
  const gut::GUFunctionEnvelope env(gut::polynomial_core({0.25, 0.1}), gut::polynomial_core({0.5, 0.2}), {-1, 1},
                                    gut::EnvelopeKind::Density, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gut::density_expectation(env));
}
BENCHMARK(BM_DensityExpectation)->Arg(1025)->Arg(16385);

}  // namespace
BENCHMARK_MAIN();
