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

#include "riskplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "riskplan/expectation.hpp"

namespace riskplan {

std::vector<EpochPlan> enumerate_epoch_plans(std::span<const PackageId> catalog) {
  std::vector<PackageId> ids(catalog.begin(), catalog.end());
  std::sort(ids.begin(), ids.end());
  std::vector<EpochPlan> out;
  std::vector<PackageId> current;
  std::vector<char> used(ids.size(), 0);
  // Preorder walk of the prefix tree with sorted children is lexicographic order.
  std::function<void()> walk = [&] {
    out.push_back(EpochPlan{current});
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      current.push_back(ids[i]);
      walk();
      current.pop_back();
      used[i] = 0;
    }
  };
  walk();
  return out;
}

BruteForceResult brute_force_finite(const Instance& instance) {
  if (instance.horizon().is_infinite()) {
    throw Error(ErrorCode::InfiniteHorizon, "brute force covers finite horizons only");
  }
  const auto epochs = static_cast<std::size_t>(instance.horizon().epochs());
  std::size_t widest = 0;
  for (std::size_t h = 0; h < epochs && (instance.heterogeneous() || h == 0); ++h) {
    widest = std::max(widest, instance.epoch_catalog(h).size());
  }
  const bool small_enough = (widest <= 4 && epochs <= 3) || (widest <= 5 && epochs <= 2);
  if (!small_enough) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "brute force needs n <= 4 and K <= 3, or n <= 5 and K <= 2 (got n = " +
                    std::to_string(widest) + ", K = " + std::to_string(epochs) + ")");
  }

  struct Candidate {
    EpochPlan plan;
    double expected;
    double survival;
  };
  std::vector<std::vector<Candidate>> candidates(epochs);
  for (std::size_t h = 0; h < epochs; ++h) {
    if (h > 0 && !instance.heterogeneous()) {
      candidates[h] = candidates[0];
      continue;
    }
    std::vector<PackageId> ids;
    for (std::size_t idx : instance.epoch_catalog(h)) ids.push_back(instance.packages()[idx].id);
    for (auto& plan : enumerate_epoch_plans(ids)) {
      const auto eval = evaluate_epoch(plan, instance, h);
      candidates[h].push_back({std::move(plan), eval.expected_reward, eval.epoch_survival});
    }
  }

  // Odometer over per-epoch candidate indices; epoch 0 is the most significant
  // digit so the first optimum met is the lexicographically smallest.
  BruteForceResult result;
  std::vector<std::size_t> pick(epochs, 0);
  std::vector<std::size_t> best_pick(epochs, 0);
  bool have_best = false;
  std::vector<double> expected(epochs);
  std::vector<double> survival(epochs);
  while (true) {
    for (std::size_t h = 0; h < epochs; ++h) {
      expected[h] = candidates[h][pick[h]].expected;
      survival[h] = candidates[h][pick[h]].survival;
    }
    const double value = total_expectation(expected, survival);
    ++result.plans_examined;
    const double tie = 1e-12 * std::max(1.0, std::abs(result.value));
    if (!have_best || value > result.value + tie) {
      result.value = value;
      best_pick = pick;
      have_best = true;
    }
    bool exhausted = true;
    for (std::size_t digit = epochs; digit-- > 0;) {
      if (++pick[digit] < candidates[digit].size()) {
        exhausted = false;
        break;
      }
      pick[digit] = 0;
    }
    if (exhausted) break;
  }

  for (std::size_t h = 0; h < epochs; ++h) {
    result.plan.plans.push_back(candidates[h][best_pick[h]].plan);
  }
  return result;
}

}  // namespace riskplan
