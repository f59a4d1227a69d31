// Copyright 2026 The riskplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "riskplan/expectation.hpp"
#include "riskplan/finite_solver.hpp"
#include "riskplan/generator.hpp"
#include "riskplan/infinite_solver.hpp"
#include "riskplan/poisson_binomial.hpp"
#include "riskplan/simulate.hpp"
#include "riskplan/team.hpp"

namespace {

using namespace riskplan;

Instance make(std::size_t n, Horizon horizon, std::uint64_t seed = 42) {
  GeneratorOptions options;
  options.n = n;
  options.horizon = horizon;
  options.rho = {0.0, 1.0};
  options.seed = seed;
  return generate_instance(options);
}

void BM_SolveFinite(benchmark::State& state) {
  const auto inst = make(static_cast<std::size_t>(state.range(0)), Horizon::finite(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_finite(inst).total());
  }
}
BENCHMARK(BM_SolveFinite)
    ->Args({1'000, 10})
    ->Args({100'000, 100})
    ->Args({1'000'000, 1'000})
    ->Unit(benchmark::kMillisecond);

void BM_SolveInfinite(benchmark::State& state) {
  const auto inst = make(static_cast<std::size_t>(state.range(0)), Horizon::infinite());
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_infinite(inst).gamma_max.value);
  }
}
BENCHMARK(BM_SolveInfinite)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMicrosecond);

void BM_EvaluateMission(benchmark::State& state) {
  const auto inst = make(static_cast<std::size_t>(state.range(0)), Horizon::finite(50));
  const auto plan = solve_finite(inst).mission_plan();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_mission(plan, inst).total.value());
  }
}
BENCHMARK(BM_EvaluateMission)->Arg(100)->Arg(10'000);

void BM_Simulate(benchmark::State& state) {
  const auto inst = make(8, Horizon::finite(5));
  const auto plan = solve_finite(inst).mission_plan();
  SimConfig config;
  config.trials = static_cast<std::uint64_t>(state.range(0));
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_mission(plan, inst, config).mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

std::vector<double> probabilities(std::size_t n) {
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = 0.05 + 0.9 * static_cast<double>(i) / static_cast<double>(n);
  return p;
}

void BM_PoissonEnum(benchmark::State& state) {
  const auto p = probabilities(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poisson_binomial_enum(p).pmf.data());
}
BENCHMARK(BM_PoissonEnum)->DenseRange(4, 16, 4);

void BM_PoissonDft(benchmark::State& state) {
  const auto p = probabilities(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poisson_binomial_dft(p).pmf.data());
}
BENCHMARK(BM_PoissonDft)->DenseRange(4, 16, 4)->Arg(64)->Arg(256);

void BM_GreedyTeam(benchmark::State& state) {
  const auto inst = make(static_cast<std::size_t>(state.range(0)), Horizon::finite(3));
  const auto agents = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_rtpd(inst, agents).total());
}
BENCHMARK(BM_GreedyTeam)->Args({6, 2})->Args({12, 4})->Args({20, 8})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
