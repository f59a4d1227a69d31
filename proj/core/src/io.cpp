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

#include "riskplan/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace riskplan {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

double number_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number()) parse_fail(std::string("field \"") + name + "\" must be a number");
  return v.get<double>();
}

PackageId id_value(const Json& v) {
  if (!v.is_number_integer()) parse_fail("package ids must be integers");
  return v.get<PackageId>();
}

std::vector<PackageId> id_list(const Json& v) {
  if (!v.is_array()) parse_fail("expected an array of package ids");
  std::vector<PackageId> ids;
  ids.reserve(v.size());
  for (const auto& x : v) ids.push_back(id_value(x));
  return ids;
}

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? Json(kInfinityToken) : Json("-inf");
  return Json(x);
}

Json epoch_plans_json(const SolveReport& report) {
  Json plans = Json::array();
  for (std::size_t h = 0; h < report.epochs(); ++h) {
    const auto view = report.plan_view(h);
    plans.push_back(Json(std::vector<PackageId>(view.begin(), view.end())));
  }
  return plans;
}

}  // namespace

Json to_json(const InstanceData& data) {
  Json j;
  j["theta"] = data.theta;
  if (data.horizon.is_finite()) {
    j["horizon"] = Json{{"finite", data.horizon.epochs()}};
  } else {
    j["horizon"] = "infinite";
  }
  Json packages = Json::array();
  for (const auto& p : data.packages) {
    packages.push_back(Json{{"id", p.id}, {"reward", p.reward}, {"rho", p.leg_success}});
  }
  j["packages"] = std::move(packages);
  if (data.per_epoch_packages) j["per_epoch_packages"] = *data.per_epoch_packages;
  return j;
}

InstanceData instance_data_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("an instance must be a JSON object");
  InstanceData data;
  data.theta = number_field(j, "theta");

  const Json& horizon = field(j, "horizon");
  if (horizon.is_string() && horizon.get<std::string>() == "infinite") {
    data.horizon = Horizon::infinite();
  } else if (horizon.is_object() && horizon.contains("finite") &&
             horizon.at("finite").is_number_integer()) {
    data.horizon = Horizon::finite(horizon.at("finite").get<std::int64_t>());
  } else {
    parse_fail("horizon must be \"infinite\" or {\"finite\": K}");
  }

  const Json& packages = field(j, "packages");
  if (!packages.is_array()) parse_fail("field \"packages\" must be an array");
  for (const auto& p : packages) {
    data.packages.push_back(
        {id_value(field(p, "id")), number_field(p, "reward"), number_field(p, "rho")});
  }

  if (j.contains("per_epoch_packages")) {
    const Json& lists = j.at("per_epoch_packages");
    if (!lists.is_array()) parse_fail("field \"per_epoch_packages\" must be an array of arrays");
    std::vector<std::vector<PackageId>> per_epoch;
    for (const auto& list : lists) per_epoch.push_back(id_list(list));
    data.per_epoch_packages = std::move(per_epoch);
  }
  return data;
}

Json to_json(const MissionPlan& plan) {
  if (const auto* finite = std::get_if<FinitePlans>(&plan)) {
    Json plans = Json::array();
    for (const auto& p : finite->plans) plans.push_back(p.ordered_ids);
    return Json{{"plans", std::move(plans)}};
  }
  return Json{{"stationary", std::get<StationaryPlan>(plan).plan.ordered_ids}};
}

MissionPlan plan_from_json(const Json& j) {
  if (j.is_object() && j.contains("plans")) {
    const Json& lists = j.at("plans");
    if (!lists.is_array()) parse_fail("field \"plans\" must be an array of arrays");
    FinitePlans plans;
    for (const auto& list : lists) plans.plans.push_back({id_list(list)});
    return plans;
  }
  if (j.is_object() && j.contains("stationary")) {
    return StationaryPlan{{id_list(j.at("stationary"))}};
  }
  parse_fail("a plan needs a \"plans\" or \"stationary\" field");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
  return Instance(instance_data_from_json(read_json_file(path)));
}

MissionPlan load_plan(const std::filesystem::path& path) {
  return plan_from_json(read_json_file(path));
}

Json to_json(const MissionValue& value) {
  if (value.is_unbounded()) return kUnboundedToken;
  return value.value();
}

Json to_json(const RatioValue& ratio) { return number(ratio.value); }

Json report_json(const SolveReport& report) {
  Json epochs = Json::array();
  double cumulative = 1.0;
  for (std::size_t h = 0; h < report.epochs(); ++h) {
    cumulative *= report.epoch_survival[h];
    epochs.push_back(Json{{"E", report.epoch_expected[h]},
                          {"survival", report.epoch_survival[h]},
                          {"cumulative_survival", cumulative}});
  }
  return Json{{"total", report.total()},
              {"values", report.values},
              {"thresholds", report.thresholds},
              {"plans", epoch_plans_json(report)},
              {"epochs", std::move(epochs)}};
}

std::string report_csv(const SolveReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "epoch,V_h,threshold,plan_size,epoch_survival\n";
  for (std::size_t h = 0; h < report.epochs(); ++h) {
    out << (h + 1) << ',' << report.values[h] << ',' << report.thresholds[h] << ','
        << report.plan_sizes[h] << ',' << report.epoch_survival[h] << '\n';
  }
  return out.str();
}

Json report_json(const InfiniteSolveReport& report) {
  Json chosen = report.chosen ? Json(*report.chosen) : Json(nullptr);
  return Json{{"chosen", std::move(chosen)},
              {"gamma_max", to_json(report.gamma_max)},
              {"total", to_json(report.total)},
              {"stationary", report.plan().plan.ordered_ids}};
}

Json report_json(const MissionEvaluation& evaluation) {
  Json epochs = Json::array();
  for (std::size_t h = 0; h < evaluation.epoch_evals.size(); ++h) {
    const auto& e = evaluation.epoch_evals[h];
    epochs.push_back(Json{{"E", e.expected_reward},
                          {"survival", e.epoch_survival},
                          {"cumulative_survival", evaluation.survival_to_epoch[h] * e.epoch_survival}});
  }
  return Json{{"total", to_json(evaluation.total)},
              {"recursive_total", to_json(evaluation.recursive_total)},
              {"stationary", evaluation.stationary},
              {"epochs", std::move(epochs)}};
}

Json report_json(const BruteForceResult& result) {
  Json plans = Json::array();
  for (const auto& p : result.plan.plans) plans.push_back(p.ordered_ids);
  return Json{{"total", result.value},
              {"plans", std::move(plans)},
              {"plans_examined", result.plans_examined}};
}

Json report_json(const SimResult& result) {
  Json histogram = Json::array();
  for (const auto& [epoch, count] : result.failure_epoch_histogram) {
    histogram.push_back(Json{{"epoch", epoch}, {"count", count}});
  }
  return Json{{"trials", result.trials},
              {"mean", result.mean},
              {"std_error", result.std_error},
              {"survivors", result.survivors},
              {"per_epoch_survival_freq", result.per_epoch_survival_freq},
              {"failure_epoch_histogram", std::move(histogram)},
              {"truncation_bias_bound", result.truncation_bias_bound}};
}

Json report_json(const TeamSolveReport& report) {
  Json plans = Json::array();
  for (const auto& row : report.plans) {
    Json tours = Json::array();
    for (const auto& tour : row[report.agents].tours) tours.push_back(tour.ordered_ids);
    plans.push_back(std::move(tours));
  }
  return Json{{"agents", report.agents},
              {"total", report.total()},
              {"values", report.values},
              {"plans", std::move(plans)}};
}

Json report_json(const PoissonBinomial& pb) {
  return Json{{"probs", pb.probs},
              {"pmf", pb.pmf},
              {"mean", pb.mean()},
              {"expected_failures", pb.expected_failures()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace riskplan
