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

// Monte Carlo mission simulator.
//
// Each trial draws every leg of every cycle independently: outbound (deliver
// on success), then return. A failed leg costs theta and ends the trial. Trial
// t uses its own random stream derived from (seed, t), so results do not
// depend on how trials are split across threads.

#ifndef RISKPLAN_SIMULATE_HPP_
#define RISKPLAN_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "riskplan/model.hpp"

namespace riskplan {

/// splitmix64 stream keyed by (seed, trial index).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

struct SimConfig {
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  std::size_t parallel_shards = 1;
  /// Epoch limit per trial for stationary plans on an infinite horizon.
  std::uint64_t epoch_cap = 100'000;
};

struct SimResult {
  std::uint64_t trials = 0;
  double mean = 0.0;
  /// Sample standard deviation / sqrt(trials).
  double std_error = 0.0;
  /// Fraction of trials alive at the start of each epoch (1-based epochs in order).
  std::vector<double> per_epoch_survival_freq;
  /// Epoch (1-based) -> number of trials in which the agent was lost there.
  std::map<std::uint64_t, std::uint64_t> failure_epoch_histogram;
  /// Trials that finished every epoch (or reached the epoch cap).
  std::uint64_t survivors = 0;
  /// Stationary plans only: survival^cap * |epoch risk ratio|, the largest
  /// possible effect of truncating trials at the epoch cap.
  double truncation_bias_bound = 0.0;
};

/// Throws Error(UnboundedSimulation) for a nonempty riskless stationary plan on
/// an infinite horizon and Error(DomainError) for zero trials or shards.
SimResult simulate_mission(const MissionPlan& plan, const Instance& instance,
                           const SimConfig& config);

}  // namespace riskplan

#endif  // RISKPLAN_SIMULATE_HPP_
