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

// Exhaustive reference solver for small finite-horizon instances.
//
// Every (subset, ordering) candidate of every epoch is enumerated explicitly,
// without using the ratio-ordering or threshold results, and scored with the
// expectation module.

#ifndef RISKPLAN_ORACLE_HPP_
#define RISKPLAN_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "riskplan/model.hpp"

namespace riskplan {

struct BruteForceResult {
  double value = 0.0;
  /// Lexicographically smallest optimal plan by (epoch, position, id).
  FinitePlans plan;
  std::uint64_t plans_examined = 0;
};

/// All ordered subsets of `catalog` (distinct ids), in lexicographic order with
/// the empty plan first.
std::vector<EpochPlan> enumerate_epoch_plans(std::span<const PackageId> catalog);

/// Accepts n <= 4 with K <= 3, or n <= 5 with K <= 2, where n is the largest
/// per-epoch catalog. Throws Error(SearchSpaceTooLarge) beyond that and
/// Error(InfiniteHorizon) for infinite horizons.
BruteForceResult brute_force_finite(const Instance& instance);

}  // namespace riskplan

#endif  // RISKPLAN_ORACLE_HPP_
