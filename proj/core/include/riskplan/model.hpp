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

// Domain types for package-delivery planning with a failure-prone agent.
//
// A package is delivered on a round trip depot -> location -> depot. Each leg
// succeeds independently with probability `leg_success`, so the round trip
// survives with leg_success^2. Losing the agent costs `theta`, and a lost agent
// performs no further deliveries in this or any later epoch.

#ifndef RISKPLAN_MODEL_HPP_
#define RISKPLAN_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "riskplan/error.hpp"

namespace riskplan {

using PackageId = std::int64_t;

/// Relative tolerance used for value comparisons throughout the library.
inline constexpr double kRelTol = 1e-12;

/// |a - b| <= rel * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double rel = kRelTol);

struct PackageSpec {
  PackageId id = 0;
  double reward = 0.0;
  double leg_success = 0.0;

  friend bool operator==(const PackageSpec&, const PackageSpec&) = default;
};

class Horizon {
 public:
  static Horizon finite(std::int64_t epochs) { return Horizon(epochs); }
  static Horizon infinite() { return Horizon(std::nullopt); }

  bool is_finite() const noexcept { return epochs_.has_value(); }
  bool is_infinite() const noexcept { return !epochs_.has_value(); }

  /// Number of epochs K. Throws Error(InfiniteHorizon) for infinite horizons.
  std::int64_t epochs() const;

  friend bool operator==(const Horizon&, const Horizon&) = default;

 private:
  explicit Horizon(std::optional<std::int64_t> epochs) : epochs_(epochs) {}
  std::optional<std::int64_t> epochs_;
};

/// Unvalidated instance contents, as read from a file or built by a caller.
struct InstanceData {
  double theta = 0.0;
  Horizon horizon = Horizon::finite(1);
  std::vector<PackageSpec> packages;
  /// Heterogeneous variant: the ids available in each epoch (one list per epoch).
  std::optional<std::vector<std::vector<PackageId>>> per_epoch_packages;
};

/// Every invariant violation in `data`, in a stable order. Empty means valid.
std::vector<Violation> find_violations(const InstanceData& data);

/// A validated, immutable problem instance.
class Instance {
 public:
  /// Throws ValidationError listing all violations if `data` is invalid.
  explicit Instance(InstanceData data);

  double theta() const noexcept { return data_.theta; }
  const Horizon& horizon() const noexcept { return data_.horizon; }
  std::span<const PackageSpec> packages() const noexcept { return data_.packages; }
  std::size_t package_count() const noexcept { return data_.packages.size(); }
  bool heterogeneous() const noexcept { return data_.per_epoch_packages.has_value(); }
  const std::optional<std::vector<std::vector<PackageId>>>& per_epoch_packages() const noexcept {
    return data_.per_epoch_packages;
  }
  const InstanceData& data() const noexcept { return data_; }

  std::optional<std::size_t> index_of(PackageId id) const;

  /// Throws Error(UnknownPackageId).
  const PackageSpec& package(PackageId id) const;

  /// Whether `id` may be delivered in the 0-based `epoch`. Homogeneous
  /// instances allow every catalog package in every epoch.
  bool allowed_in_epoch(PackageId id, std::size_t epoch) const;

  /// Indices into packages() of the catalog for the 0-based `epoch`.
  std::vector<std::size_t> epoch_catalog(std::size_t epoch) const;

 private:
  InstanceData data_;
  std::unordered_map<PackageId, std::size_t> index_;
  std::vector<std::vector<PackageId>> sorted_epoch_ids_;
};

/// Result of validate_instance: the validated instance or the full violation list.
using ValidationOutcome = std::variant<Instance, std::vector<Violation>>;

ValidationOutcome validate_instance(InstanceData data);

/// Reward-to-risk ratio of a single delivery cycle: r*rho / (1 - rho^2).
/// Riskless positive-reward packages map to +infinity.
struct RatioValue {
  double value = 0.0;

  bool unbounded() const noexcept;
  friend auto operator<=>(const RatioValue&, const RatioValue&) = default;
};

RatioValue reward_to_risk(const PackageSpec& package);

/// Strict weak ordering for delivery order within an epoch: non-increasing
/// ratio, ties by ascending id. Unbounded-ratio packages come first, ordered by
/// descending reward then ascending id.
bool ranks_before(const PackageSpec& a, const PackageSpec& b);

/// Indices of `packages` in canonical delivery order.
std::vector<std::size_t> rank_packages(std::span<const PackageSpec> packages);

/// d = log(rho) / log(phi), so that rho = phi^d. Throws Error(DomainError) outside 0 < rho <= 1, 0 < phi < 1.
double probability_to_distance(double rho, double phi);

/// phi^d, the inverse of probability_to_distance.
double distance_to_probability(double distance, double phi);

struct EpochPlan {
  std::vector<PackageId> ordered_ids;

  bool empty() const noexcept { return ordered_ids.empty(); }
  std::size_t size() const noexcept { return ordered_ids.size(); }
  friend bool operator==(const EpochPlan&, const EpochPlan&) = default;
};

struct FinitePlans {
  std::vector<EpochPlan> plans;
  friend bool operator==(const FinitePlans&, const FinitePlans&) = default;
};

struct StationaryPlan {
  EpochPlan plan;
  friend bool operator==(const StationaryPlan&, const StationaryPlan&) = default;
};

using MissionPlan = std::variant<FinitePlans, StationaryPlan>;

/// Checks that `plan` repeats no id and only uses packages allowed in the
/// 0-based `epoch` (any catalog package when `epoch` is empty).
void check_epoch_plan(const EpochPlan& plan, const Instance& instance,
                      std::optional<std::size_t> epoch = std::nullopt);

/// Resolves a plan to package records in plan order, after check_epoch_plan.
std::vector<PackageSpec> resolve_plan(const EpochPlan& plan, const Instance& instance,
                                      std::optional<std::size_t> epoch = std::nullopt);

}  // namespace riskplan

#endif  // RISKPLAN_MODEL_HPP_
