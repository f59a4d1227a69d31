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

// Instance and plan files, plus JSON/CSV reports for every solver.

#ifndef RISKPLAN_IO_HPP_
#define RISKPLAN_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "riskplan/expectation.hpp"
#include "riskplan/finite_solver.hpp"
#include "riskplan/infinite_solver.hpp"
#include "riskplan/mdp.hpp"
#include "riskplan/model.hpp"
#include "riskplan/oracle.hpp"
#include "riskplan/poisson_binomial.hpp"
#include "riskplan/simulate.hpp"
#include "riskplan/team.hpp"

namespace riskplan {

using Json = nlohmann::json;

/// Marker emitted in place of a number for unbounded values.
inline constexpr const char* kUnboundedToken = "unbounded";
/// Marker emitted for an infinite reward-to-risk ratio.
inline constexpr const char* kInfinityToken = "inf";

Json to_json(const InstanceData& data);
/// Throws Error(ParseError) on a schema mismatch. Does not validate values.
InstanceData instance_data_from_json(const Json& j);

Json to_json(const MissionPlan& plan);
MissionPlan plan_from_json(const Json& j);

/// Throws Error(IoError) naming the path when the file cannot be read and
/// Error(ParseError) when it is not JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Reads and validates an instance file; throws ValidationError on bad values.
Instance load_instance(const std::filesystem::path& path);
MissionPlan load_plan(const std::filesystem::path& path);

Json to_json(const MissionValue& value);
Json to_json(const RatioValue& ratio);

Json report_json(const SolveReport& report);
/// Columns: epoch, V_h, threshold, plan_size, epoch_survival; one row per epoch.
std::string report_csv(const SolveReport& report);
Json report_json(const InfiniteSolveReport& report);
Json report_json(const MissionEvaluation& evaluation);
Json report_json(const BruteForceResult& result);
Json report_json(const SimResult& result);
Json report_json(const TeamSolveReport& report);
Json report_json(const PoissonBinomial& pb);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace riskplan

#endif  // RISKPLAN_IO_HPP_
