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

#include "riskplan/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace riskplan {

MdpModel::MdpModel(std::vector<PackageSpec> packages, double theta)
    : packages_(std::move(packages)), ranked_(rank_packages(packages_)), theta_(theta) {}

MdpModel build_model(const Instance& instance) {
  if (instance.horizon().is_finite()) {
    throw Error(ErrorCode::FiniteHorizon, "the MDP models the infinite-horizon problem");
  }
  if (instance.package_count() > kMaxMdpPackages) {
    throw Error(ErrorCode::TooManyPackages,
                std::to_string(instance.package_count()) + " packages; the action space is "
                "enumerated only up to " + std::to_string(kMaxMdpPackages));
  }
  return MdpModel(std::vector<PackageSpec>(instance.packages().begin(), instance.packages().end()),
                  instance.theta());
}

ActionRow MdpModel::row(Action action) const {
  ActionRow out;
  out.action = action;
  double survival = 1.0;
  double delivered_reward = 0.0;
  std::uint32_t delivered = 0;
  for (std::size_t idx : ranked_) {
    if (!(action & (Action{1} << idx))) continue;
    const auto& p = packages_[idx];
    out.execution_order.push_back(p.id);
    // Lost on the outbound leg, before this package is delivered.
    const double lost_outbound = survival * (1.0 - p.leg_success);
    out.transitions.push_back({{StateKind::PartialFailure, delivered}, lost_outbound});
    out.expected_reward += lost_outbound * (delivered_reward - theta_);
    survival *= p.leg_success;
    delivered |= Action{1} << idx;
    delivered_reward += p.reward;
    // Lost on the return leg: the package counts, the agent does not come back.
    // Merged with the next outbound loss this is psi_j (1 - rho_j rho_{j+1}).
    const double lost_return = survival * (1.0 - p.leg_success);
    survival *= p.leg_success;
    out.transitions.push_back({{StateKind::PartialFailure, delivered}, lost_return});
    out.expected_reward += lost_return * (delivered_reward - theta_);
  }
  // Adjacent entries with the same delivered prefix are one state.
  std::vector<Transition> merged;
  for (const auto& t : out.transitions) {
    if (!merged.empty() && merged.back().to == t.to) {
      merged.back().probability += t.probability;
    } else {
      merged.push_back(t);
    }
  }
  out.transitions = std::move(merged);
  out.transitions.push_back({{StateKind::FullSuccess, action}, survival});
  out.success_probability = survival;
  out.expected_reward += survival * delivered_reward;
  return out;
}

std::vector<Transition> MdpModel::successors(const MdpState& state, Action action) const {
  switch (state.kind) {
    case StateKind::Alive:
      return row(action).transitions;
    case StateKind::FullSuccess:
      return {{{StateKind::Alive, 0}, 1.0}};
    case StateKind::PartialFailure:
    case StateKind::Dead:
      return {{{StateKind::Dead, 0}, 1.0}};
  }
  return {};
}

double MdpModel::reward(const MdpState& state) const {
  double delivered = 0.0;
  for (std::size_t i = 0; i < packages_.size(); ++i) {
    if (state.mask & (std::uint32_t{1} << i)) delivered += packages_[i].reward;
  }
  switch (state.kind) {
    case StateKind::PartialFailure: return delivered - theta_;
    case StateKind::FullSuccess: return delivered;
    default: return 0.0;
  }
}

EpochPlan MdpModel::induced_plan(Action action) const { return EpochPlan{row(action).execution_order}; }

Action parse_action(std::string_view bits, std::size_t package_count) {
  if (bits.size() != package_count) {
    throw Error(ErrorCode::DomainError, "action needs " + std::to_string(package_count) +
                                            " bits, got " + std::to_string(bits.size()));
  }
  Action action = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      action |= Action{1} << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::DomainError, "action bits must be 0 or 1");
    }
  }
  return action;
}

std::string format_action(Action action, std::size_t package_count) {
  std::string bits(package_count, '0');
  for (std::size_t i = 0; i < package_count; ++i) {
    if (action & (Action{1} << i)) bits[i] = '1';
  }
  return bits;
}

MissionValue action_value(const MdpModel& model, Action action) {
  const auto r = model.row(action);
  if (r.success_probability < 1.0) {
    return MissionValue::finite(r.expected_reward / (1.0 - r.success_probability));
  }
  if (model.reward({StateKind::FullSuccess, action}) > 0.0) return MissionValue::unbounded();
  return MissionValue::finite(0.0);
}

namespace {

constexpr std::size_t kMaxSweeps = 200'000'000;

}  // namespace

PolicyValue evaluate_policy(const MdpModel& model, Action action) {
  const auto closed = action_value(model, action);
  if (closed.is_unbounded()) {
    throw Error(ErrorCode::UnboundedValue,
                "action " + format_action(action, model.package_count()) +
                    " never fails and keeps earning");
  }

  // States reachable from x_s under the stationary policy: x_s, x_d, the
  // partial-failure states and x_{1,a}. Values satisfy
  // W(x) = sum_y p(x, y) (R(y) + W(y)).
  const auto alive_row = model.row(action);
  std::vector<MdpState> states{{StateKind::Alive, 0}, {StateKind::Dead, 0}};
  for (const auto& t : alive_row.transitions) states.push_back(t.to);

  struct Edge {
    std::size_t to;
    double probability;
    double reward;
  };
  std::vector<std::vector<Edge>> edges(states.size());
  auto index_of = [&](const MdpState& s) {
    return static_cast<std::size_t>(std::find(states.begin(), states.end(), s) - states.begin());
  };
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& t : model.successors(states[i], action)) {
      edges[i].push_back({index_of(t.to), t.probability, model.reward(t.to)});
    }
  }

  std::vector<double> value(states.size(), 0.0);
  PolicyValue out;
  out.closed_form = closed.value();
  for (std::size_t sweep = 1;; ++sweep) {
    double change = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      double v = 0.0;
      for (const auto& e : edges[i]) v += e.probability * (e.reward + value[e.to]);
      change = std::max(change, std::abs(v - value[i]));
      value[i] = v;
    }
    const double scale = std::max(1.0, std::abs(value[0]));
    if (change <= 1e-15 * scale) {
      out.sweeps = sweep;
      break;
    }
    if (sweep == kMaxSweeps) {
      throw Error(ErrorCode::NonConvergence, "value iteration did not settle");
    }
  }
  out.iterative = value[0];
  if (!nearly_equal(out.iterative, out.closed_form, 1e-10)) {
    throw Error(ErrorCode::NonConvergence, "iterative value disagrees with the closed form");
  }
  return out;
}

BestPolicy best_stationary_policy(const MdpModel& model) {
  BestPolicy best;
  for (std::uint64_t a = 1; a < model.action_count(); ++a) {
    const auto action = static_cast<Action>(a);
    const auto v = action_value(model, action);
    if (best.value.is_unbounded()) break;
    if (v.is_unbounded() || v.value() > best.value.value()) {
      best.action = action;
      best.value = v;
    }
  }
  return best;
}

}  // namespace riskplan
