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

#include "riskplan/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

namespace riskplan {

bool nearly_equal(double a, double b, double rel) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

std::int64_t Horizon::epochs() const {
  if (!epochs_) throw Error(ErrorCode::InfiniteHorizon, "horizon is infinite");
  return *epochs_;
}

namespace {

std::string id_text(PackageId id) { return "package " + std::to_string(id); }

}  // namespace

std::vector<Violation> find_violations(const InstanceData& data) {
  std::vector<Violation> out;
  if (!(data.theta >= 0.0) || !std::isfinite(data.theta)) {
    out.push_back({ErrorCode::NegativeTheta, "theta must be a finite non-negative number"});
  }
  if (data.horizon.is_finite() && data.horizon.epochs() < 1) {
    out.push_back({ErrorCode::HorizonMismatch,
                   "finite horizon needs at least one epoch, got " +
                       std::to_string(data.horizon.epochs())});
  }

  std::unordered_set<PackageId> seen;
  for (const auto& p : data.packages) {
    if (p.id < 0) out.push_back({ErrorCode::InvalidId, id_text(p.id) + ": id must be non-negative"});
    if (!(p.reward >= 0.0) || !std::isfinite(p.reward)) {
      out.push_back({ErrorCode::NegativeReward,
                     id_text(p.id) + ": reward must be finite and non-negative"});
    }
    if (!(p.leg_success >= 0.0 && p.leg_success <= 1.0)) {
      out.push_back({ErrorCode::ProbabilityOutOfRange,
                     id_text(p.id) + ": rho must lie in [0, 1]"});
    }
    if (!seen.insert(p.id).second) {
      out.push_back({ErrorCode::DuplicateId, id_text(p.id) + " appears more than once"});
    }
  }

  if (data.per_epoch_packages) {
    const auto& lists = *data.per_epoch_packages;
    if (data.horizon.is_infinite()) {
      out.push_back({ErrorCode::HorizonMismatch,
                     "per_epoch_packages is not allowed with an infinite horizon"});
    } else if (data.horizon.epochs() >= 1 &&
               static_cast<std::int64_t>(lists.size()) != data.horizon.epochs()) {
      out.push_back({ErrorCode::HorizonMismatch,
                     "per_epoch_packages has " + std::to_string(lists.size()) +
                         " entries but the horizon has " +
                         std::to_string(data.horizon.epochs()) + " epochs"});
    }
    for (std::size_t h = 0; h < lists.size(); ++h) {
      std::unordered_set<PackageId> in_epoch;
      for (PackageId id : lists[h]) {
        if (!seen.contains(id)) {
          out.push_back({ErrorCode::UnknownPackageId,
                         "epoch " + std::to_string(h + 1) + " lists unknown " + id_text(id)});
        } else if (!in_epoch.insert(id).second) {
          out.push_back({ErrorCode::DuplicateId,
                         "epoch " + std::to_string(h + 1) + " lists " + id_text(id) + " twice"});
        }
      }
    }
  }
  return out;
}

Instance::Instance(InstanceData data) : data_(std::move(data)) {
  auto violations = find_violations(data_);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  index_.reserve(data_.packages.size());
  for (std::size_t i = 0; i < data_.packages.size(); ++i) index_.emplace(data_.packages[i].id, i);
  if (data_.per_epoch_packages) {
    for (const auto& ids : *data_.per_epoch_packages) {
      auto sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      sorted_epoch_ids_.push_back(std::move(sorted));
    }
  }
}

std::optional<std::size_t> Instance::index_of(PackageId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const PackageSpec& Instance::package(PackageId id) const {
  auto idx = index_of(id);
  if (!idx) throw Error(ErrorCode::UnknownPackageId, "no " + id_text(id) + " in the catalog");
  return data_.packages[*idx];
}

bool Instance::allowed_in_epoch(PackageId id, std::size_t epoch) const {
  if (!index_.contains(id)) return false;
  if (!heterogeneous()) return true;
  if (epoch >= sorted_epoch_ids_.size()) return false;
  return std::binary_search(sorted_epoch_ids_[epoch].begin(), sorted_epoch_ids_[epoch].end(), id);
}

std::vector<std::size_t> Instance::epoch_catalog(std::size_t epoch) const {
  std::vector<std::size_t> out;
  if (!heterogeneous()) {
    out.resize(data_.packages.size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  if (epoch >= data_.per_epoch_packages->size()) return out;
  for (PackageId id : (*data_.per_epoch_packages)[epoch]) out.push_back(index_.at(id));
  return out;
}

ValidationOutcome validate_instance(InstanceData data) {
  auto violations = find_violations(data);
  if (!violations.empty()) return violations;
  return Instance(std::move(data));
}

bool RatioValue::unbounded() const noexcept { return std::isinf(value); }

RatioValue reward_to_risk(const PackageSpec& package) {
  const double r = package.reward;
  const double rho = package.leg_success;
  if (r == 0.0 || rho == 0.0) return {0.0};
  if (rho == 1.0) return {std::numeric_limits<double>::infinity()};
  return {r * rho / (1.0 - rho * rho)};
}

bool ranks_before(const PackageSpec& a, const PackageSpec& b) {
  const double ga = reward_to_risk(a).value;
  const double gb = reward_to_risk(b).value;
  if (ga != gb) return ga > gb;
  if (std::isinf(ga) && a.reward != b.reward) return a.reward > b.reward;
  return a.id < b.id;
}

std::vector<std::size_t> rank_packages(std::span<const PackageSpec> packages) {
  struct Key {
    double gamma;
    double reward;
    PackageId id;
    std::size_t index;
  };
  std::vector<Key> keys;
  keys.reserve(packages.size());
  for (std::size_t i = 0; i < packages.size(); ++i) {
    const auto& p = packages[i];
    keys.push_back({reward_to_risk(p).value, p.reward, p.id, i});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.gamma != b.gamma) return a.gamma > b.gamma;
    if (std::isinf(a.gamma) && a.reward != b.reward) return a.reward > b.reward;
    return a.id < b.id;
  });
  std::vector<std::size_t> order;
  order.reserve(keys.size());
  for (const auto& k : keys) order.push_back(k.index);
  return order;
}

double probability_to_distance(double rho, double phi) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw Error(ErrorCode::DomainError, "phi must lie in (0, 1)");
  }
  if (rho == 0.0) {
    throw Error(ErrorCode::DomainError, "rho = 0 corresponds to an infinite distance");
  }
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::DomainError, "rho must lie in (0, 1]");
  if (rho == 1.0) return 0.0;
  return std::log(rho) / std::log(phi);
}

double distance_to_probability(double distance, double phi) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw Error(ErrorCode::DomainError, "phi must lie in (0, 1)");
  }
  if (!(distance >= 0.0)) throw Error(ErrorCode::DomainError, "distance must be non-negative");
  return std::pow(phi, distance);
}

void check_epoch_plan(const EpochPlan& plan, const Instance& instance,
                      std::optional<std::size_t> epoch) {
  std::unordered_set<PackageId> seen;
  seen.reserve(plan.ordered_ids.size());
  for (PackageId id : plan.ordered_ids) {
    if (!instance.index_of(id)) {
      throw Error(ErrorCode::UnknownPackageId, "plan references unknown " + id_text(id));
    }
    if (epoch && !instance.allowed_in_epoch(id, *epoch)) {
      throw Error(ErrorCode::UnknownPackageId,
                  id_text(id) + " is not available in epoch " + std::to_string(*epoch + 1));
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::RepeatedPackage, id_text(id) + " appears twice in one epoch");
    }
  }
}

std::vector<PackageSpec> resolve_plan(const EpochPlan& plan, const Instance& instance,
                                      std::optional<std::size_t> epoch) {
  check_epoch_plan(plan, instance, epoch);
  std::vector<PackageSpec> out;
  out.reserve(plan.ordered_ids.size());
  for (PackageId id : plan.ordered_ids) out.push_back(instance.package(id));
  return out;
}

}  // namespace riskplan
