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

#include <gtest/gtest.h>

#include <cmath>

#include "riskplan/expectation.hpp"
#include "riskplan/finite_solver.hpp"
#include "riskplan/oracle.hpp"
#include "support/properties.hpp"
#include "support/random_instances.hpp"

namespace riskplan {
namespace {

using testing::Rng;

Instance make(double theta, std::int64_t k, std::vector<PackageSpec> pkgs) {
  InstanceData d;
  d.theta = theta;
  d.horizon = Horizon::finite(k);
  d.packages = std::move(pkgs);
  return Instance(std::move(d));
}

TEST(EnumerateEpochPlans, LexicographicWithEmptyFirst) {
  const std::vector<PackageId> ids = {4, 2};
  std::vector<std::vector<PackageId>> got;
  for (const auto& p : enumerate_epoch_plans(ids)) got.push_back(p.ordered_ids);
  EXPECT_EQ(got, (std::vector<std::vector<PackageId>>{{}, {2}, {2, 4}, {4}, {4, 2}}));
  const std::vector<PackageId> four = {0, 1, 2, 3};
  EXPECT_EQ(enumerate_epoch_plans(four).size(), 65u);
  EXPECT_EQ(enumerate_epoch_plans({}).size(), 1u);
}

TEST(BruteForce, TinyCases) {
  const auto a = brute_force_finite(make(1.0, 1, {{0, 1.0, 0.5}}));
  EXPECT_EQ(a.value, 0.0);
  EXPECT_EQ(a.plan, (FinitePlans{{{}}}));
  EXPECT_EQ(a.plans_examined, 2u);
  const auto b = brute_force_finite(make(1.0, 2, {}));
  EXPECT_EQ(b.value, 0.0);
  EXPECT_EQ(b.plan, (FinitePlans{{{}, {}}}));
}

TEST(BruteForce, TwoEpochExample) {
  const auto r = brute_force_finite(make(0.5, 2, {{0, 10.0, 0.9}, {1, 1.0, 0.6}}));
  EXPECT_NEAR(r.value, 16.301758, 1e-12);
  EXPECT_EQ(r.plan, (FinitePlans{{{{0}}, {{0, 1}}}}));
  EXPECT_EQ(r.plans_examined, 25u);
}

TEST(BruteForce, TiesResolveToSmallestPlan) {
  const auto r = brute_force_finite(make(0.0, 1, {{3, 1.0, 0.5}, {1, 1.0, 0.5}}));
  EXPECT_EQ(r.plan, (FinitePlans{{{{1, 3}}}}));
}

TEST(BruteForce, SearchSpaceLimits) {
  std::vector<PackageSpec> five, six;
  for (int i = 0; i < 6; ++i) {
    if (i < 5) five.push_back({i, 1.0, 0.5});
    six.push_back({i, 1.0, 0.5});
  }
  EXPECT_NO_THROW(brute_force_finite(make(0.0, 2, five)));
  auto code = [](const Instance& inst) {
    try {
      brute_force_finite(inst);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code(make(0.0, 3, five)), ErrorCode::SearchSpaceTooLarge);
  EXPECT_EQ(code(make(0.0, 1, six)), ErrorCode::SearchSpaceTooLarge);
  InstanceData inf;
  inf.horizon = Horizon::infinite();
  EXPECT_EQ(code(Instance(inf)), ErrorCode::InfiniteHorizon);
}

TEST(BruteForce, DominatesRandomPlansAndOrdersByRatio) {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = testing::uniform_index(rng, 5);
    const auto k = 1 + testing::uniform_index(rng, 3);
    const auto inst = testing::random_instance(rng, n, Horizon::finite(static_cast<std::int64_t>(k)));
    const auto r = brute_force_finite(inst);
    EXPECT_NEAR(evaluate_mission(r.plan, inst).total.value(), r.value, 1e-15);
    for (int i = 0; i < 50; ++i) {
      const auto plans = testing::random_finite_plans(rng, inst);
      EXPECT_LE(evaluate_mission(plans, inst).total.value(), r.value);
    }
    const auto solved = solve_finite(inst);
    if (testing::ratio_gaps_exceed(inst, solved, 1e-9)) {
      EXPECT_TRUE(testing::ordered_by_ratio(inst, r.plan, 1e-9));
    }
  }
}

}  // namespace
}  // namespace riskplan
