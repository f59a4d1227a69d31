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

#include "support/random_instances.hpp"

#include <utility>

namespace riskplan::testing {

double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  const auto i = static_cast<std::size_t>(uniform(rng, 0.0, static_cast<double>(n)));
  return i < n ? i : n - 1;
}

bool coin(Rng& rng, double p) { return uniform(rng, 0.0, 1.0) < p; }

InstanceData random_data(Rng& rng, std::size_t n, Horizon horizon, const Ranges& ranges) {
  InstanceData data;
  data.horizon = horizon;
  data.theta = uniform(rng, 0.0, ranges.theta_max);
  for (std::size_t i = 0; i < n; ++i) {
    PackageSpec p;
    p.id = static_cast<PackageId>(i);
    p.reward = uniform(rng, 0.0, ranges.reward_max);
    p.leg_success = uniform(rng, ranges.rho_lo, ranges.rho_hi);
    if (coin(rng, ranges.edge_prob)) {
      switch (uniform_index(rng, 3)) {
        case 0: p.reward = 0.0; break;
        case 1: p.leg_success = 0.0; break;
        default: p.leg_success = 1.0; break;
      }
    }
    data.packages.push_back(p);
  }
  // Non-contiguous ids catch code that confuses ids with indices.
  if (coin(rng, 0.5)) {
    for (auto& p : data.packages) p.id = p.id * 7 + 3;
    shuffle(rng, data.packages);
  }
  return data;
}

Instance random_instance(Rng& rng, std::size_t n, Horizon horizon, const Ranges& ranges) {
  return Instance(random_data(rng, n, horizon, ranges));
}

Instance random_heterogeneous(Rng& rng, std::size_t n, std::size_t epochs, const Ranges& ranges) {
  auto data = random_data(rng, n, Horizon::finite(static_cast<std::int64_t>(epochs)), ranges);
  std::vector<std::vector<PackageId>> lists(epochs);
  for (auto& list : lists) {
    for (const auto& p : data.packages) {
      if (coin(rng, 0.6)) list.push_back(p.id);
    }
    shuffle(rng, list);
  }
  data.per_epoch_packages = std::move(lists);
  return Instance(std::move(data));
}

std::vector<PackageId> catalog_ids(const Instance& instance, std::optional<std::size_t> epoch) {
  std::vector<PackageId> ids;
  for (const auto& p : instance.packages()) {
    if (!epoch || instance.allowed_in_epoch(p.id, *epoch)) ids.push_back(p.id);
  }
  return ids;
}

EpochPlan random_epoch_plan(Rng& rng, std::span<const PackageId> ids) {
  EpochPlan plan;
  for (PackageId id : ids) {
    if (coin(rng, 0.5)) plan.ordered_ids.push_back(id);
  }
  shuffle(rng, plan.ordered_ids);
  return plan;
}

FinitePlans random_finite_plans(Rng& rng, const Instance& instance) {
  FinitePlans plans;
  const auto epochs = static_cast<std::size_t>(instance.horizon().epochs());
  for (std::size_t h = 0; h < epochs; ++h) {
    const auto ids = catalog_ids(instance, instance.heterogeneous() ? std::optional(h) : std::nullopt);
    plans.plans.push_back(random_epoch_plan(rng, ids));
  }
  return plans;
}

}  // namespace riskplan::testing
