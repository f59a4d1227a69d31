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

#include "riskplan/team.hpp"

#include <string>
#include <unordered_set>

#include "riskplan/expectation.hpp"
#include "riskplan/poisson_binomial.hpp"

namespace riskplan {

namespace {

using Tour = std::vector<PackageSpec>;

std::vector<double> full_continuation(std::span<const double> continuation, std::size_t agents) {
  if (continuation.empty()) return std::vector<double>(agents + 1, 0.0);
  if (continuation.size() != agents + 1) {
    throw Error(ErrorCode::DomainError,
                "continuation needs " + std::to_string(agents + 1) + " values, got " +
                    std::to_string(continuation.size()));
  }
  return {continuation.begin(), continuation.end()};
}

double survival_of(const Tour& tour) {
  double s = 1.0;
  for (const auto& p : tour) s *= p.leg_success * p.leg_success;
  return s;
}

/// sum_b Q~(b) (cont[b] - theta (n - b)) for one agent.
double bound_for(std::span<const double> survivals, std::size_t agent,
                 std::span<const double> cont, double theta) {
  const auto quotient = quotient_without_agent(survivals, agent);
  const double n = static_cast<double>(survivals.size());
  double bound = 0.0;
  for (std::size_t b = 0; b < quotient.size(); ++b) {
    bound += quotient[b] * (cont[b] - theta * (n - static_cast<double>(b)));
  }
  return bound;
}

/// Value change from inserting `pkg` into `tour` at its canonical position,
/// given the agent's continuation bound.
double gain_for(const Tour& tour, const PackageSpec& pkg, double bound) {
  std::size_t pos = 0;
  double prefix_survival = 1.0;
  while (pos < tour.size() && !ranks_before(pkg, tour[pos])) {
    prefix_survival *= tour[pos].leg_success * tour[pos].leg_success;
    ++pos;
  }
  // Reward and survival of the displaced suffix, relative to its own start.
  double suffix_reward = 0.0;
  double suffix_survival = 1.0;
  for (std::size_t j = pos; j < tour.size(); ++j) {
    suffix_reward += tour[j].reward * suffix_survival * tour[j].leg_success;
    suffix_survival *= tour[j].leg_success * tour[j].leg_success;
  }
  const double rho = pkg.leg_success;
  return prefix_survival *
         (pkg.reward * rho - (1.0 - rho * rho) * (suffix_reward + suffix_survival * bound));
}

std::vector<Tour> resolve_tours(const TeamEpochPlan& team, const Instance& instance,
                                std::optional<std::size_t> epoch) {
  check_team_plan(team, instance, epoch);
  std::vector<Tour> tours;
  tours.reserve(team.tours.size());
  for (const auto& t : team.tours) tours.push_back(resolve_plan(t, instance, epoch));
  return tours;
}

double delivered_reward(const std::vector<Tour>& tours) {
  double reward = 0.0;
  for (const auto& tour : tours) {
    reward += evaluate_sequence(tour, 0.0).expected_reward;
  }
  return reward;
}

std::vector<double> survivals_of(const std::vector<Tour>& tours) {
  std::vector<double> out;
  out.reserve(tours.size());
  for (const auto& t : tours) out.push_back(survival_of(t));
  return out;
}

double value_of(const std::vector<Tour>& tours, double theta, std::span<const double> cont) {
  const auto pb = poisson_binomial(survivals_of(tours));
  const double n = static_cast<double>(tours.size());
  double value = delivered_reward(tours);
  for (std::size_t b = 0; b < pb.pmf.size(); ++b) {
    value += pb.pmf[b] * (cont[b] - theta * (n - static_cast<double>(b)));
  }
  return value;
}

const PackageSpec& unassigned_package(const TeamEpochPlan& team, const Instance& instance,
                                      PackageId package) {
  for (const auto& tour : team.tours) {
    for (PackageId id : tour.ordered_ids) {
      if (id == package) {
        throw Error(ErrorCode::AlreadyAssigned,
                    "package " + std::to_string(package) + " is already in a tour");
      }
    }
  }
  return instance.package(package);
}

}  // namespace

void check_team_plan(const TeamEpochPlan& team, const Instance& instance,
                     std::optional<std::size_t> epoch) {
  std::unordered_set<PackageId> seen;
  for (const auto& tour : team.tours) {
    for (PackageId id : tour.ordered_ids) {
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::OverlappingTours,
                    "package " + std::to_string(id) + " is assigned more than once");
      }
    }
    check_epoch_plan(tour, instance, epoch);
  }
}

std::vector<double> tour_survivals(const TeamEpochPlan& team, const Instance& instance) {
  return survivals_of(resolve_tours(team, instance, std::nullopt));
}

double team_epoch_expectation(const TeamEpochPlan& team, const Instance& instance,
                              std::optional<std::size_t> epoch) {
  const auto tours = resolve_tours(team, instance, epoch);
  return value_of(tours, instance.theta(), std::vector<double>(tours.size() + 1, 0.0));
}

double team_epoch_value(const TeamEpochPlan& team, const Instance& instance,
                        std::span<const double> continuation) {
  const auto tours = resolve_tours(team, instance, std::nullopt);
  const auto cont = full_continuation(continuation, tours.size());
  return value_of(tours, instance.theta(), cont);
}

double reward_to_risk_bound(const TeamEpochPlan& team, const Instance& instance, std::size_t agent,
                            std::span<const double> continuation) {
  const auto tours = resolve_tours(team, instance, std::nullopt);
  if (agent >= tours.size()) throw Error(ErrorCode::DomainError, "agent index out of range");
  const auto cont = full_continuation(continuation, tours.size());
  return bound_for(survivals_of(tours), agent, cont, instance.theta());
}

double marginal_gain(const TeamEpochPlan& team, const Instance& instance, std::size_t agent,
                     PackageId package, std::span<const double> continuation) {
  const auto& pkg = unassigned_package(team, instance, package);
  const double bound = reward_to_risk_bound(team, instance, agent, continuation);
  const double rho = pkg.leg_success;
  return pkg.reward * rho - (1.0 - rho * rho) * bound;
}

double insertion_gain(const TeamEpochPlan& team, const Instance& instance, std::size_t agent,
                      PackageId package, std::span<const double> continuation) {
  const auto& pkg = unassigned_package(team, instance, package);
  const auto tours = resolve_tours(team, instance, std::nullopt);
  if (agent >= tours.size()) throw Error(ErrorCode::DomainError, "agent index out of range");
  const auto cont = full_continuation(continuation, tours.size());
  const double bound = bound_for(survivals_of(tours), agent, cont, instance.theta());
  return gain_for(tours[agent], pkg, bound);
}

TeamSolveReport greedy_rtpd(const Instance& instance, std::size_t agents) {
  if (instance.horizon().is_infinite()) {
    throw Error(ErrorCode::InfiniteHorizon, "the team greedy plans finite horizons");
  }
  if (agents == 0) throw Error(ErrorCode::DomainError, "need at least one agent");
  if (agents > kMaxTeamAgents || instance.package_count() > kMaxTeamPackages) {
    throw Error(ErrorCode::ScaleLimitExceeded,
                "team greedy supports up to " + std::to_string(kMaxTeamAgents) + " agents and " +
                    std::to_string(kMaxTeamPackages) + " packages");
  }
  const auto epochs = static_cast<std::size_t>(instance.horizon().epochs());
  const double theta = instance.theta();
  const auto packages = instance.packages();

  TeamSolveReport report;
  report.agents = agents;
  report.values.assign(epochs + 1, std::vector<double>(agents + 1, 0.0));
  report.plans.assign(epochs, std::vector<TeamEpochPlan>(agents + 1));

  for (std::size_t h = epochs; h-- > 0;) {
    const auto catalog = instance.epoch_catalog(h);
    const auto& next_values = report.values[h + 1];
    for (std::size_t team_size = 1; team_size <= agents; ++team_size) {
      const std::span<const double> cont(next_values.data(), team_size + 1);
      std::vector<Tour> tours(team_size);
      std::vector<char> assigned(packages.size(), 0);

      while (true) {
        const auto survivals = survivals_of(tours);
        std::vector<double> bounds(team_size);
        for (std::size_t m = 0; m < team_size; ++m) {
          bounds[m] = bound_for(survivals, m, cont, theta);
        }
        double best_gain = 0.0;
        std::size_t best_agent = 0;
        std::optional<std::size_t> best_package;
        for (std::size_t m = 0; m < team_size; ++m) {
          for (std::size_t idx : catalog) {
            if (assigned[idx]) continue;
            const double gain = gain_for(tours[m], packages[idx], bounds[m]);
            const bool better =
                gain > best_gain ||
                (best_package && gain == best_gain && m == best_agent &&
                 packages[idx].id < packages[*best_package].id);
            if (gain > 0.0 && better) {
              best_gain = gain;
              best_agent = m;
              best_package = idx;
            }
          }
        }
        if (!best_package) break;
        auto& tour = tours[best_agent];
        const auto& pkg = packages[*best_package];
        auto pos = tour.begin();
        while (pos != tour.end() && !ranks_before(pkg, *pos)) ++pos;
        tour.insert(pos, pkg);
        assigned[*best_package] = 1;
      }

      TeamEpochPlan plan;
      for (const auto& tour : tours) {
        EpochPlan p;
        for (const auto& pkg : tour) p.ordered_ids.push_back(pkg.id);
        plan.tours.push_back(std::move(p));
      }
      report.values[h][team_size] = value_of(tours, theta, cont);
      report.plans[h][team_size] = std::move(plan);
    }
  }
  return report;
}

}  // namespace riskplan
