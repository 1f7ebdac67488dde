// Copyright (c) 2026 EcoPlan Authors
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

#include "ecoplan/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "ecoplan/heuristics.hpp"
#include "ecoplan/io.hpp"

namespace ecoplan
{

namespace
{

MethodReport error_stats_against(
  const std::string & method, const CostToGoTable & table,
  const GridSpec & spec, Heuristic & heuristic)
{
  MethodReport report;
  report.method = method;
  double sum = 0.0;
  double min_err = std::numeric_limits<double>::infinity();
  double max_err = -std::numeric_limits<double>::infinity();
  std::int64_t count = 0;
  for (int stage = 0; stage <= table.stages(); ++stage) {
    for (int vidx = 0; vidx < table.speeds(); ++vidx) {
      const NodeId node{stage, vidx};
      const double exact = table.cost_to_go(node);
      if (!std::isfinite(exact)) {
        continue;
      }
      const double err = heuristic.at(node) - exact;
      sum += err;
      min_err = std::min(min_err, err);
      max_err = std::max(max_err, err);
      ++count;
    }
  }
  report.sample_count = count;
  report.avg_err_J = count > 0 ? sum / static_cast<double>(count) : 0.0;
  report.min_err_J = count > 0 ? min_err : 0.0;
  report.max_err_J = count > 0 ? max_err : 0.0;
  return report;
}

}  // namespace

CompareReport compare(const GridSpec & spec, const VehicleParams & params, const RoadProfile & road)
{
  CompareReport report;

  const CostToGoTable table = solve(spec, params, road);
  const PlanResult dp_plan = extract_trajectory(table, spec, params, road);

  MethodReport dp_row;
  dp_row.method = "DP";
  dp_row.nodes_expanded = table.evaluated_states();
  dp_row.total_energy_J = dp_plan.total_energy;

  Heuristic h_soa(HeuristicKind::SoA, params, road, spec);
  Heuristic h_pro(HeuristicKind::Proposed, params, road, spec);
  MethodReport soa_row = error_stats_against("A* h_SoA", table, spec, h_soa);
  MethodReport pro_row = error_stats_against("A* h_pro", table, spec, h_pro);
  dp_row.sample_count = soa_row.sample_count;

  const PlanResult soa_plan = plan(spec, params, road, HeuristicKind::SoA);
  const PlanResult pro_plan = plan(spec, params, road, HeuristicKind::Proposed);
  soa_row.nodes_expanded = soa_plan.nodes_expanded;
  soa_row.total_energy_J = soa_plan.total_energy;
  pro_row.nodes_expanded = pro_plan.nodes_expanded;
  pro_row.total_energy_J = pro_plan.total_energy;

  report.rows = {dp_row, soa_row, pro_row};

  std::unordered_set<NodeId, NodeIdHash> pro_set(pro_plan.expanded.begin(),
    pro_plan.expanded.end());
  std::unordered_set<NodeId, NodeIdHash> soa_set(soa_plan.expanded.begin(),
    soa_plan.expanded.end());
  for (int stage = 0; stage <= table.stages(); ++stage) {
    for (int vidx = 0; vidx < table.speeds(); ++vidx) {
      const NodeId node{stage, vidx};
      const bool by_soa = soa_set.count(node) != 0;
      const bool by_pro = pro_set.count(node) != 0;
      if (by_soa || by_pro) {
        report.explored.push_back({node, by_soa, by_pro});
      }
    }
  }
  return report;
}

std::string CompareReport::to_text() const
{
  std::ostringstream out;
  out << "method     nodes_expanded  avg_err_J        min_err_J        max_err_J        "
    "total_energy_J\n";
  for (const MethodReport & row : rows) {
    char buffer[256];
    std::snprintf(
      buffer, sizeof(buffer), "%-10s %14lld  %-16.6f %-16.6f %-16.6f %.6f\n",
      row.method.c_str(), static_cast<long long>(row.nodes_expanded),
      row.avg_err_J, row.min_err_J, row.max_err_J, row.total_energy_J);
    out << buffer;
  }
  return out.str();
}

std::string CompareReport::to_json() const
{
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const MethodReport & row : rows) {
    nlohmann::ordered_json entry;
    entry["method"] = row.method;
    entry["nodes_expanded"] = row.nodes_expanded;
    entry["avg_err_J"] = row.avg_err_J;
    entry["min_err_J"] = row.min_err_J;
    entry["max_err_J"] = row.max_err_J;
    entry["total_energy_J"] = row.total_energy_J;
    doc.push_back(entry);
  }
  return doc.dump(2) + "\n";
}

std::string CompareReport::explored_csv() const
{
  std::ostringstream out;
  out << "stage,vidx,expanded_by\n";
  for (const ExploredNode & e : explored) {
    const char * label = (e.by_soa && e.by_pro) ? "both" : (e.by_soa ? "soa" : "pro");
    out << e.node.stage << ',' << e.node.vidx << ',' << label << '\n';
  }
  return out.str();
}

}  // namespace ecoplan
