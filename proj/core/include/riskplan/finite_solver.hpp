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

#ifndef RISKPLAN_FINITE_SOLVER_HPP_
#define RISKPLAN_FINITE_SOLVER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "riskplan/model.hpp"

namespace riskplan {

/// Optimal finite-horizon solution. Epoch indices are 0-based.
///
/// Plans are stored as prefixes of ranked id lists so a homogeneous solve keeps
/// one shared ranking instead of K copies. Epoch h delivers the first
/// plan_sizes[h] ids of rankings[ranking_of[h]].
struct SolveReport {
  /// Value-to-go V_1..V_{K+1}; the last entry is 0.
  std::vector<double> values;
  /// Inclusion threshold theta + V_{h+1} for each epoch.
  std::vector<double> thresholds;
  /// Conditional expected reward of each epoch's plan.
  std::vector<double> epoch_expected;
  /// Probability of completing each epoch's plan.
  std::vector<double> epoch_survival;

  std::vector<std::vector<PackageId>> rankings;
  std::vector<std::size_t> ranking_of;
  std::vector<std::size_t> plan_sizes;

  std::size_t epochs() const noexcept { return plan_sizes.size(); }
  double total() const { return values.front(); }
  std::span<const PackageId> plan_view(std::size_t epoch) const;
  EpochPlan epoch_plan(std::size_t epoch) const;
  MissionPlan mission_plan() const;
};

/// Homogeneous catalog. One sort, then an O(n + K) backward sweep: the included
/// set is a prefix of the ranked catalog whose length only moves with the
/// threshold. A package is included iff its ratio strictly exceeds the threshold.
/// Throws Error(InfiniteHorizon) or Error(InvalidInstance) for per-epoch catalogs.
SolveReport solve_finite(const Instance& instance);

/// Per-epoch catalogs; each epoch filters the global ranking. O(Kn + n log n).
/// Throws Error(MissingPerEpochCatalog) or Error(InfiniteHorizon).
SolveReport solve_finite_heterogeneous(const Instance& instance);

}  // namespace riskplan

#endif  // RISKPLAN_FINITE_SOLVER_HPP_
