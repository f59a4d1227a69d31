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

#include "riskplan/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "riskplan/expectation.hpp"

namespace riskplan {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct Cycle {
  double reward;
  double leg_success;
};

struct TrialOutcome {
  double reward = 0.0;
  /// 1-based epoch of the loss; 0 when the agent survived.
  std::uint64_t lost_in = 0;
};

}  // namespace

std::uint64_t TrialRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix(seed ^ mix(trial + kGolden))) {}

std::uint64_t TrialRng::next() {
  state_ += kGolden;
  return mix(state_);
}

double TrialRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SimResult simulate_mission(const MissionPlan& plan, const Instance& instance,
                           const SimConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::DomainError, "trials must be positive");
  if (config.parallel_shards == 0) throw Error(ErrorCode::DomainError, "shards must be positive");
  if (config.epoch_cap == 0) throw Error(ErrorCode::DomainError, "epoch cap must be positive");

  // Resolve the plan into per-epoch cycle lists (validated by evaluate_mission).
  const auto analytic = evaluate_mission(plan, instance);
  std::vector<std::vector<Cycle>> epochs;
  auto cycles_of = [&](const EpochPlan& p) {
    std::vector<Cycle> out;
    for (PackageId id : p.ordered_ids) {
      const auto& pkg = instance.package(id);
      out.push_back({pkg.reward, pkg.leg_success});
    }
    return out;
  };
  const bool repeat_forever = instance.horizon().is_infinite();
  if (const auto* finite = std::get_if<FinitePlans>(&plan)) {
    for (const auto& p : finite->plans) epochs.push_back(cycles_of(p));
  } else {
    const auto& stationary = std::get<StationaryPlan>(plan).plan;
    const std::size_t copies =
        repeat_forever ? 1 : static_cast<std::size_t>(instance.horizon().epochs());
    epochs.assign(copies, cycles_of(stationary));
  }

  SimResult result;
  result.trials = config.trials;
  const double theta = instance.theta();

  if (repeat_forever) {
    const auto& eval = analytic.epoch_evals.front();
    if (epochs.front().empty()) {
      result.survivors = config.trials;
      result.per_epoch_survival_freq.push_back(1.0);
      return result;
    }
    if (eval.epoch_survival >= 1.0) {
      throw Error(ErrorCode::UnboundedSimulation,
                  "a riskless stationary plan never terminates");
    }
    const double ratio = eval.expected_reward / (1.0 - eval.epoch_survival);
    result.truncation_bias_bound =
        std::pow(eval.epoch_survival, static_cast<double>(config.epoch_cap)) * std::abs(ratio);
  }
  const std::uint64_t epoch_limit = repeat_forever ? config.epoch_cap : epochs.size();

  auto run_trial = [&](std::uint64_t trial) {
    TrialRng rng(config.seed, trial);
    TrialOutcome out;
    for (std::uint64_t h = 0; h < epoch_limit; ++h) {
      const auto& cycles = epochs[repeat_forever ? 0 : h];
      for (const auto& c : cycles) {
        if (!rng.bernoulli(c.leg_success)) {
          out.reward -= theta;
          out.lost_in = h + 1;
          return out;
        }
        out.reward += c.reward;
        if (!rng.bernoulli(c.leg_success)) {
          out.reward -= theta;
          out.lost_in = h + 1;
          return out;
        }
      }
    }
    return out;
  };

  std::vector<TrialOutcome> outcomes(config.trials);
  const std::size_t shards =
      static_cast<std::size_t>(std::min<std::uint64_t>(config.parallel_shards, config.trials));
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) outcomes[t] = run_trial(t);
  };
  if (shards == 1) {
    run_range(0, config.trials);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(shards);
    const std::uint64_t chunk = (config.trials + shards - 1) / shards;
    for (std::size_t s = 0; s < shards; ++s) {
      const std::uint64_t begin = std::min<std::uint64_t>(s * chunk, config.trials);
      const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, config.trials);
      workers.emplace_back(run_range, begin, end);
    }
    for (auto& w : workers) w.join();
  }

  // Reductions run in trial order so the result is independent of sharding.
  double sum = 0.0;
  for (const auto& o : outcomes) sum += o.reward;
  const auto n = static_cast<double>(config.trials);
  result.mean = sum / n;
  double squares = 0.0;
  for (const auto& o : outcomes) squares += (o.reward - result.mean) * (o.reward - result.mean);
  result.std_error = config.trials > 1 ? std::sqrt(squares / (n - 1.0)) / std::sqrt(n) : 0.0;

  std::uint64_t last_loss = 0;
  for (const auto& o : outcomes) {
    if (o.lost_in == 0) {
      ++result.survivors;
    } else {
      ++result.failure_epoch_histogram[o.lost_in];
      last_loss = std::max(last_loss, o.lost_in);
    }
  }
  const std::uint64_t reported = repeat_forever ? std::max<std::uint64_t>(last_loss, 1) : epoch_limit;
  std::uint64_t alive = config.trials;
  for (std::uint64_t h = 1; h <= reported; ++h) {
    result.per_epoch_survival_freq.push_back(static_cast<double>(alive) / n);
    auto it = result.failure_epoch_histogram.find(h);
    if (it != result.failure_epoch_histogram.end()) alive -= it->second;
  }
  return result;
}

}  // namespace riskplan
