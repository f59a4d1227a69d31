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

// Experimental team extension: several identical agents share an epoch's
// catalog, each flying its own tour. Agents lost in an epoch are gone for the
// rest of the mission, and nobody picks up a lost agent's remaining packages.
//
// Continuation values are indexed by the number of agents that survive the
// epoch: continuation[b] is the value-to-go with b agents, b = 0..tours.size().
// An empty continuation means zero for every b (single-epoch use).

#ifndef RISKPLAN_TEAM_HPP_
#define RISKPLAN_TEAM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "riskplan/model.hpp"

namespace riskplan {

inline constexpr std::size_t kMaxTeamAgents = 8;
inline constexpr std::size_t kMaxTeamPackages = 20;

struct TeamEpochPlan {
  /// One ordered tour per available agent.
  std::vector<EpochPlan> tours;

  friend bool operator==(const TeamEpochPlan&, const TeamEpochPlan&) = default;
};

/// Throws Error(OverlappingTours) when a package appears more than once, and
/// Error(UnknownPackageId) for ids outside the (epoch) catalog.
void check_team_plan(const TeamEpochPlan& team, const Instance& instance,
                     std::optional<std::size_t> epoch = std::nullopt);

/// Probability that each agent completes its tour.
std::vector<double> tour_survivals(const TeamEpochPlan& team, const Instance& instance);

/// Delivered reward minus theta times the expected number of lost agents.
double team_epoch_expectation(const TeamEpochPlan& team, const Instance& instance,
                              std::optional<std::size_t> epoch = std::nullopt);

/// team_epoch_expectation plus sum_b P(b) continuation[b].
double team_epoch_value(const TeamEpochPlan& team, const Instance& instance,
                        std::span<const double> continuation);

/// sum_b Q~(b) (continuation[b] - theta (n - b)) for `agent`, where Q~ is the
/// Poisson quotient difference of that agent. A package appended to the agent's
/// tour has positive marginal gain iff its ratio exceeds this bound.
double reward_to_risk_bound(const TeamEpochPlan& team, const Instance& instance, std::size_t agent,
                            std::span<const double> continuation);

/// delta = r rho - (1 - rho^2) * reward_to_risk_bound for appending `package`
/// as the agent's last cycle. The change in team_epoch_value is delta times
/// the agent's current tour survival. Throws Error(AlreadyAssigned).
double marginal_gain(const TeamEpochPlan& team, const Instance& instance, std::size_t agent,
                     PackageId package, std::span<const double> continuation);

/// Change in team_epoch_value from inserting `package` into the agent's tour at
/// its canonical ratio position. Equals survival * marginal_gain when the
/// package lands last. Throws Error(AlreadyAssigned).
double insertion_gain(const TeamEpochPlan& team, const Instance& instance, std::size_t agent,
                      PackageId package, std::span<const double> continuation);

struct TeamSolveReport {
  std::size_t agents = 0;
  /// values[h][b]: value-to-go at 0-based epoch h with b agents; row K is zero.
  std::vector<std::vector<double>> values;
  /// plans[h][b]: the b-agent allocation for epoch h (plans[h][0] has no tours).
  std::vector<std::vector<TeamEpochPlan>> plans;

  double total() const { return values.front()[agents]; }
};

/// Backward over epochs and surviving counts: repeatedly inserts the
/// (agent, package) pair with the largest positive insertion gain, ties by
/// ascending agent then package id, against the continuation values of the
/// plans already built for later epochs. Values are the exact expected reward
/// of the resulting policy. Throws Error(ScaleLimitExceeded) beyond
/// kMaxTeamAgents agents or kMaxTeamPackages packages.
TeamSolveReport greedy_rtpd(const Instance& instance, std::size_t agents);

}  // namespace riskplan

#endif  // RISKPLAN_TEAM_HPP_
