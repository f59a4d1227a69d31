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

// Markov decision process view of the infinite-horizon problem.
//
// The chain has an alive state x_s, an absorbing dead state x_d, one
// partial-failure state x_{0,f} per delivered prefix f, and one full-success
// state x_{1,a} per action. An action is an n-bit subset of the catalog (bit i
// selects packages()[i]); its packages run in canonical ratio order. Only the
// alive state has a nontrivial transition row, and rows are built on demand.

#ifndef RISKPLAN_MDP_HPP_
#define RISKPLAN_MDP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riskplan/expectation.hpp"
#include "riskplan/model.hpp"

namespace riskplan {

using Action = std::uint32_t;

inline constexpr std::size_t kMaxMdpPackages = 16;

enum class StateKind { Alive, Dead, PartialFailure, FullSuccess };

struct MdpState {
  StateKind kind = StateKind::Alive;
  /// Delivered subset for PartialFailure, the action for FullSuccess.
  std::uint32_t mask = 0;

  friend bool operator==(const MdpState&, const MdpState&) = default;
};

struct Transition {
  MdpState to;
  double probability = 0.0;
};

/// Outgoing row of the alive state under one action.
struct ActionRow {
  Action action = 0;
  std::vector<PackageId> execution_order;
  /// Partial failures in prefix order, then the full-success transition.
  std::vector<Transition> transitions;
  double success_probability = 1.0;
  /// One-epoch expected reward: sum over successors of probability * reward.
  double expected_reward = 0.0;
};

class MdpModel {
 public:
  std::size_t package_count() const noexcept { return packages_.size(); }
  std::uint64_t action_count() const noexcept { return std::uint64_t{1} << packages_.size(); }
  std::span<const PackageSpec> packages() const noexcept { return packages_; }
  double theta() const noexcept { return theta_; }

  ActionRow row(Action action) const;
  std::vector<Transition> successors(const MdpState& state, Action action) const;
  double reward(const MdpState& state) const;
  EpochPlan induced_plan(Action action) const;

 private:
  friend MdpModel build_model(const Instance& instance);
  MdpModel(std::vector<PackageSpec> packages, double theta);

  std::vector<PackageSpec> packages_;
  std::vector<std::size_t> ranked_;
  double theta_ = 0.0;
};

/// Throws Error(TooManyPackages) above kMaxMdpPackages and Error(FiniteHorizon)
/// for finite-horizon instances.
MdpModel build_model(const Instance& instance);

/// Throws Error(DomainError) when `bits` has the wrong length or characters.
Action parse_action(std::string_view bits, std::size_t package_count);
std::string format_action(Action action, std::size_t package_count);

struct PolicyValue {
  /// E_a / (1 - success probability).
  double closed_form = 0.0;
  /// Fixed point of value-iteration sweeps over the chain.
  double iterative = 0.0;
  std::size_t sweeps = 0;
};

/// Value of x_s when `action` is repeated forever, computed by the closed form
/// and by iterating the chain; the two must agree within 1e-10 (relative).
/// Throws Error(UnboundedValue) for riskless positive-reward actions and
/// Error(NonConvergence) if the sweeps stall or disagree.
PolicyValue evaluate_policy(const MdpModel& model, Action action);

/// Closed-form stationary value of an action; unbounded values are reported, not thrown.
MissionValue action_value(const MdpModel& model, Action action);

struct BestPolicy {
  Action action = 0;
  MissionValue value = MissionValue::finite(0.0);
};

/// Exhaustive search over all 2^n actions by closed-form value. Ties keep the
/// numerically smallest action (idle first).
BestPolicy best_stationary_policy(const MdpModel& model);

}  // namespace riskplan

#endif  // RISKPLAN_MDP_HPP_
