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

// Checks shared by unit and acceptance tests.

#ifndef RISKPLAN_TESTS_SUPPORT_PROPERTIES_HPP_
#define RISKPLAN_TESTS_SUPPORT_PROPERTIES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "riskplan/finite_solver.hpp"
#include "riskplan/model.hpp"

namespace riskplan::testing {

/// True when, in every epoch, all catalog ratios differ pairwise by more than
/// `gap`, none lies within `gap` of the epoch threshold and at most one is
/// riskless. Only then is the
/// optimal plan unique up to floating-point noise.
bool ratio_gaps_exceed(const Instance& instance, const SolveReport& report, double gap);

/// Whether consecutive packages of every plan in `plans` have non-increasing
/// ratio, considering only pairs whose ratios differ by more than `gap`.
bool ordered_by_ratio(const Instance& instance, const FinitePlans& plans, double gap);

struct PerturbationTally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Removes each included package, and appends each excluded package whose
/// ratio is below threshold - gap, expecting the mission value to drop.
/// The value is compared from the perturbed epoch on, conditioned on
/// reaching it, in quad precision. Riskless zero-reward packages are neutral
/// and skipped.
PerturbationTally perturbation_checks(const Instance& instance, const SolveReport& report,
                                      double gap);

}  // namespace riskplan::testing

#endif  // RISKPLAN_TESTS_SUPPORT_PROPERTIES_HPP_
