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

#include "riskplan/infinite_solver.hpp"

namespace riskplan {

StationaryPlan InfiniteSolveReport::plan() const {
  StationaryPlan out;
  if (chosen) out.plan.ordered_ids.push_back(*chosen);
  return out;
}

InfiniteSolveReport solve_infinite(const Instance& instance) {
  if (instance.horizon().is_finite()) {
    throw Error(ErrorCode::FiniteHorizon, "use solve_finite for finite horizons");
  }
  if (instance.heterogeneous()) {
    throw Error(ErrorCode::InvalidInstance, "infinite horizons take a single catalog");
  }

  InfiniteSolveReport report;
  const PackageSpec* best = nullptr;
  double best_gamma = 0.0;
  for (const auto& p : instance.packages()) {
    const double g = reward_to_risk(p).value;
    if (!best || g > best_gamma || (g == best_gamma && p.id < best->id)) {
      best = &p;
      best_gamma = g;
    }
  }
  if (!best) return report;

  report.gamma_max = RatioValue{best_gamma};
  if (!(best_gamma > instance.theta())) return report;

  report.chosen = best->id;
  if (report.gamma_max.unbounded()) {
    report.total = MissionValue::unbounded();
  } else {
    report.total = MissionValue::finite(best_gamma - instance.theta());
  }
  return report;
}

}  // namespace riskplan
