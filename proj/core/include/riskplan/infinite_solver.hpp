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

#ifndef RISKPLAN_INFINITE_SOLVER_HPP_
#define RISKPLAN_INFINITE_SOLVER_HPP_

#include <optional>

#include "riskplan/expectation.hpp"
#include "riskplan/model.hpp"

namespace riskplan {

struct InfiniteSolveReport {
  /// Package repeated every epoch; empty when no package beats theta.
  std::optional<PackageId> chosen;
  RatioValue gamma_max;
  /// max(0, gamma_max - theta), or unbounded for a riskless positive-reward package.
  MissionValue total = MissionValue::finite(0.0);

  StationaryPlan plan() const;
};

/// Single pass over the catalog. The best stationary plan delivers only the
/// package with the largest reward-to-risk ratio (lowest id among maximizers),
/// and nothing at all when that ratio does not exceed theta.
/// Throws Error(FiniteHorizon) or Error(InvalidInstance) for per-epoch catalogs.
InfiniteSolveReport solve_infinite(const Instance& instance);

}  // namespace riskplan

#endif  // RISKPLAN_INFINITE_SOLVER_HPP_
