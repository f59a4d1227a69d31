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

#include "riskplan/expectation.hpp"

#include <limits>
#include <string>

namespace riskplan {

double MissionValue::value() const {
  if (unbounded_) throw Error(ErrorCode::UnboundedValue, "expected reward is unbounded");
  return value_;
}

EpochEvaluation evaluate_sequence(std::span<const PackageSpec> ordered, double theta) {
  EpochEvaluation out;
  out.delivery_probs.reserve(ordered.size());
  double survival = 1.0;
  double reward = 0.0;
  for (const auto& p : ordered) {
    const double psi = survival * p.leg_success;
    out.delivery_probs.push_back(psi);
    reward += p.reward * psi;
    survival *= p.leg_success * p.leg_success;
  }
  out.epoch_survival = survival;
  out.expected_reward = reward - theta * (1.0 - survival);
  return out;
}

EpochEvaluation evaluate_epoch(const EpochPlan& plan, const Instance& instance,
                               std::optional<std::size_t> epoch) {
  const auto packages = resolve_plan(plan, instance, epoch);
  return evaluate_sequence(packages, instance.theta());
}

double total_expectation(std::span<const double> expected, std::span<const double> survival) {
  double total = 0.0;
  double alive = 1.0;
  for (std::size_t h = 0; h < expected.size(); ++h) {
    total += expected[h] * alive;
    alive *= survival[h];
  }
  return total;
}

double backward_total(std::span<const double> expected, std::span<const double> survival) {
  double v = 0.0;
  for (std::size_t h = expected.size(); h-- > 0;) v = expected[h] + survival[h] * v;
  return v;
}

MissionValue stationary_value(const EpochEvaluation& epoch) {
  if (epoch.epoch_survival < 1.0) {
    return MissionValue::finite(epoch.expected_reward / (1.0 - epoch.epoch_survival));
  }
  // Riskless epoch: nothing is ever lost, so any positive reward accrues forever.
  if (epoch.expected_reward > 0.0) return MissionValue::unbounded();
  return MissionValue::finite(0.0);
}

MissionEvaluation evaluate_mission(const MissionPlan& plan, const Instance& instance) {
  MissionEvaluation out;
  const Horizon& horizon = instance.horizon();

  if (horizon.is_infinite()) {
    const auto* stationary = std::get_if<StationaryPlan>(&plan);
    if (!stationary) {
      throw Error(ErrorCode::HorizonMismatch, "an infinite horizon needs a stationary plan");
    }
    out.stationary = true;
    out.epoch_evals.push_back(evaluate_epoch(stationary->plan, instance));
    out.survival_to_epoch.push_back(1.0);
    out.total = stationary_value(out.epoch_evals.front());
    out.recursive_total = out.total;
    return out;
  }

  const auto epochs = static_cast<std::size_t>(horizon.epochs());
  std::vector<const EpochPlan*> per_epoch;
  per_epoch.reserve(epochs);
  if (const auto* finite = std::get_if<FinitePlans>(&plan)) {
    if (finite->plans.size() != epochs) {
      throw Error(ErrorCode::HorizonMismatch,
                  "plan covers " + std::to_string(finite->plans.size()) +
                      " epochs but the horizon has " + std::to_string(epochs));
    }
    for (const auto& p : finite->plans) per_epoch.push_back(&p);
  } else {
    const auto& repeated = std::get<StationaryPlan>(plan).plan;
    per_epoch.assign(epochs, &repeated);
  }

  std::vector<double> expected(epochs);
  std::vector<double> survival(epochs);
  out.epoch_evals.reserve(epochs);
  out.survival_to_epoch.reserve(epochs);
  double alive = 1.0;
  for (std::size_t h = 0; h < epochs; ++h) {
    out.epoch_evals.push_back(evaluate_epoch(*per_epoch[h], instance, h));
    expected[h] = out.epoch_evals.back().expected_reward;
    survival[h] = out.epoch_evals.back().epoch_survival;
    out.survival_to_epoch.push_back(alive);
    alive *= survival[h];
  }
  out.total = MissionValue::finite(total_expectation(expected, survival));
  out.recursive_total = MissionValue::finite(backward_total(expected, survival));
  return out;
}

double epoch_risk_ratio(const EpochPlan& plan, const Instance& instance) {
  if (plan.empty()) throw Error(ErrorCode::EmptyPlan, "epoch risk ratio needs a nonempty plan");
  const auto eval = evaluate_epoch(plan, instance);
  if (eval.epoch_survival < 1.0) return eval.expected_reward / (1.0 - eval.epoch_survival);
  if (eval.expected_reward > 0.0) return std::numeric_limits<double>::infinity();
  return 0.0;
}

}  // namespace riskplan
