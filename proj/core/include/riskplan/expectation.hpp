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

#ifndef RISKPLAN_EXPECTATION_HPP_
#define RISKPLAN_EXPECTATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "riskplan/model.hpp"

namespace riskplan {

/// Expected value that may be unbounded (riskless positive-reward stationary plans).
class MissionValue {
 public:
  static MissionValue finite(double value) { return MissionValue(value, false); }
  static MissionValue unbounded() { return MissionValue(0.0, true); }

  bool is_unbounded() const noexcept { return unbounded_; }
  /// Throws Error(UnboundedValue) when unbounded.
  double value() const;

  friend bool operator==(const MissionValue&, const MissionValue&) = default;

 private:
  MissionValue(double value, bool unbounded) : value_(value), unbounded_(unbounded) {}
  double value_;
  bool unbounded_;
};

struct EpochEvaluation {
  /// Probability that each package of the plan is delivered (psi).
  std::vector<double> delivery_probs;
  /// Probability that the agent completes the whole epoch.
  double epoch_survival = 1.0;
  /// Expected reward conditioned on the agent being alive at epoch start.
  double expected_reward = 0.0;
};

/// Evaluates packages that are already in delivery order. Survival products are
/// taken sequentially in plan order; underflow to zero is accepted.
EpochEvaluation evaluate_sequence(std::span<const PackageSpec> ordered, double theta);

/// `epoch` (0-based) restricts ids to that epoch's catalog in heterogeneous instances.
EpochEvaluation evaluate_epoch(const EpochPlan& plan, const Instance& instance,
                               std::optional<std::size_t> epoch = std::nullopt);

struct MissionEvaluation {
  std::vector<EpochEvaluation> epoch_evals;
  /// P(agent alive at the start of each epoch); first entry is 1.
  std::vector<double> survival_to_epoch;
  /// Direct sum over epochs (finite) or the geometric closed form (stationary).
  MissionValue total = MissionValue::finite(0.0);
  /// Same quantity via v_h = E_h + survival_h * v_{h+1}. Equals `total` for
  /// stationary infinite plans.
  MissionValue recursive_total = MissionValue::finite(0.0);
  bool stationary = false;
};

/// Finite horizons accept FinitePlans of length K, or a StationaryPlan repeated K
/// times. Infinite horizons require a StationaryPlan. Throws Error(HorizonMismatch).
MissionEvaluation evaluate_mission(const MissionPlan& plan, const Instance& instance);

/// sum_h expected[h] * prod_{l<h} survival[l].
double total_expectation(std::span<const double> expected, std::span<const double> survival);

/// Backward recursion v_h = expected[h] + survival[h] * v_{h+1}, v_{K+1} = 0.
double backward_total(std::span<const double> expected, std::span<const double> survival);

/// Value of repeating one epoch forever: E / (1 - survival). Zero for plans that
/// earn nothing; unbounded for riskless plans with positive reward.
MissionValue stationary_value(const EpochEvaluation& epoch);

/// E / (1 - survival) for a nonempty plan; +inf when the plan is riskless and
/// earns a positive reward. Throws Error(EmptyPlan).
double epoch_risk_ratio(const EpochPlan& plan, const Instance& instance);

}  // namespace riskplan

#endif  // RISKPLAN_EXPECTATION_HPP_
