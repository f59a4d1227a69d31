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

#include "riskplan/finite_solver.hpp"

#include "riskplan/expectation.hpp"

namespace riskplan {

std::span<const PackageId> SolveReport::plan_view(std::size_t epoch) const {
  const auto& ranking = rankings[ranking_of[epoch]];
  return std::span<const PackageId>(ranking.data(), plan_sizes[epoch]);
}

EpochPlan SolveReport::epoch_plan(std::size_t epoch) const {
  const auto view = plan_view(epoch);
  return EpochPlan{std::vector<PackageId>(view.begin(), view.end())};
}

MissionPlan SolveReport::mission_plan() const {
  FinitePlans plans;
  plans.plans.reserve(epochs());
  for (std::size_t h = 0; h < epochs(); ++h) plans.plans.push_back(epoch_plan(h));
  return plans;
}

namespace {

std::size_t checked_epochs(const Instance& instance) {
  if (instance.horizon().is_infinite()) {
    throw Error(ErrorCode::InfiniteHorizon, "use solve_infinite for infinite horizons");
  }
  return static_cast<std::size_t>(instance.horizon().epochs());
}

void init_report(SolveReport& report, std::size_t epochs) {
  report.values.assign(epochs + 1, 0.0);
  report.thresholds.assign(epochs, 0.0);
  report.epoch_expected.assign(epochs, 0.0);
  report.epoch_survival.assign(epochs, 1.0);
  report.plan_sizes.assign(epochs, 0);
}

}  // namespace

SolveReport solve_finite(const Instance& instance) {
  const std::size_t epochs = checked_epochs(instance);
  if (instance.heterogeneous()) {
    throw Error(ErrorCode::InvalidInstance,
                "instance has per-epoch catalogs; use solve_finite_heterogeneous");
  }
  const auto packages = instance.packages();
  const double theta = instance.theta();
  const auto order = rank_packages(packages);
  const std::size_t n = order.size();

  // Prefix sums over the ranked catalog, accumulated exactly as evaluate_sequence does.
  std::vector<double> gamma(n);
  std::vector<double> prefix_reward(n + 1, 0.0);
  std::vector<double> prefix_survival(n + 1, 1.0);
  std::vector<PackageId> ranking(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& p = packages[order[j]];
    ranking[j] = p.id;
    gamma[j] = reward_to_risk(p).value;
    const double psi = prefix_survival[j] * p.leg_success;
    prefix_reward[j + 1] = prefix_reward[j] + p.reward * psi;
    prefix_survival[j + 1] = prefix_survival[j] * (p.leg_success * p.leg_success);
  }

  SolveReport report;
  init_report(report, epochs);
  report.rankings.push_back(std::move(ranking));
  report.ranking_of.assign(epochs, 0);

  std::size_t q = n;
  for (std::size_t h = epochs; h-- > 0;) {
    const double next = report.values[h + 1];
    const double threshold = theta + next;
    // Thresholds rise as h decreases, so q mostly shrinks; moving both ways keeps
    // the prefix exact even if rounding makes V_h dip below V_{h+1}.
    while (q > 0 && !(gamma[q - 1] > threshold)) --q;
    while (q < n && gamma[q] > threshold) ++q;
    const double expected = prefix_reward[q] - theta * (1.0 - prefix_survival[q]);
    report.thresholds[h] = threshold;
    report.plan_sizes[h] = q;
    report.epoch_expected[h] = expected;
    report.epoch_survival[h] = prefix_survival[q];
    report.values[h] = expected + prefix_survival[q] * next;
  }
  return report;
}

SolveReport solve_finite_heterogeneous(const Instance& instance) {
  const std::size_t epochs = checked_epochs(instance);
  if (!instance.heterogeneous()) {
    throw Error(ErrorCode::MissingPerEpochCatalog, "instance has no per_epoch_packages");
  }
  const auto packages = instance.packages();
  const double theta = instance.theta();
  const auto order = rank_packages(packages);
  std::vector<double> gamma(packages.size());
  for (std::size_t i = 0; i < packages.size(); ++i) gamma[i] = reward_to_risk(packages[i]).value;

  SolveReport report;
  init_report(report, epochs);
  report.rankings.resize(epochs);
  report.ranking_of.resize(epochs);

  std::vector<char> available(packages.size(), 0);
  std::vector<PackageSpec> chosen;
  for (std::size_t h = epochs; h-- > 0;) {
    const double next = report.values[h + 1];
    const double threshold = theta + next;
    const auto catalog = instance.epoch_catalog(h);
    for (std::size_t idx : catalog) available[idx] = 1;

    chosen.clear();
    for (std::size_t idx : order) {
      if (!available[idx]) continue;
      if (!(gamma[idx] > threshold)) break;
      chosen.push_back(packages[idx]);
    }
    for (std::size_t idx : catalog) available[idx] = 0;

    const auto eval = evaluate_sequence(chosen, theta);
    auto& ranking = report.rankings[h];
    ranking.reserve(chosen.size());
    for (const auto& p : chosen) ranking.push_back(p.id);
    report.ranking_of[h] = h;
    report.thresholds[h] = threshold;
    report.plan_sizes[h] = chosen.size();
    report.epoch_expected[h] = eval.expected_reward;
    report.epoch_survival[h] = eval.epoch_survival;
    report.values[h] = eval.expected_reward + eval.epoch_survival * next;
  }
  return report;
}

}  // namespace riskplan
