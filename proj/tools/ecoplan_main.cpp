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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecoplan/astar.hpp"
#include "ecoplan/dp.hpp"
#include "ecoplan/experiment.hpp"
#include "ecoplan/grid.hpp"
#include "ecoplan/heuristics.hpp"
#include "ecoplan/io.hpp"
#include "ecoplan/model.hpp"

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNoPath = 3;
constexpr double kKmhToMps = 1.0 / 3.6;

struct GridOptions
{
  std::optional<double> s_start;
  std::optional<double> s_goal;
  double ds = 10.0;
  double v_min = 5.0;
  double v_max = 40.0;
  double dv = 0.5;
  std::optional<double> v_init;
  std::optional<double> v_goal;
  std::optional<double> v_init_kmh;
  std::optional<double> v_goal_kmh;
};

void add_grid_options(CLI::App * cmd, GridOptions & opts)
{
  cmd->add_option("--s-start", opts.s_start, "Start position [m] (default: first road sample)");
  cmd->add_option("--s-goal", opts.s_goal, "Goal position [m] (default: last road sample)");
  cmd->add_option("--ds", opts.ds, "Distance step [m]")->capture_default_str();
  cmd->add_option("--v-min", opts.v_min, "Minimum grid speed [m/s]")->capture_default_str();
  cmd->add_option("--v-max", opts.v_max, "Maximum grid speed [m/s]")->capture_default_str();
  cmd->add_option("--dv", opts.dv, "Velocity step [m/s]")->capture_default_str();
  auto * v_init = cmd->add_option("--v-init", opts.v_init, "Initial speed [m/s]");
  auto * v_goal = cmd->add_option("--v-goal", opts.v_goal, "Goal speed [m/s]");
  auto * v_init_kmh = cmd->add_option("--v-init-kmh", opts.v_init_kmh, "Initial speed [km/h]");
  auto * v_goal_kmh = cmd->add_option("--v-goal-kmh", opts.v_goal_kmh, "Goal speed [km/h]");
  v_init->excludes(v_init_kmh);
  v_init_kmh->excludes(v_init);
  v_goal->excludes(v_goal_kmh);
  v_goal_kmh->excludes(v_goal);
}

ecoplan::GridSpec make_grid(const GridOptions & opts, const ecoplan::RoadProfile & road)
{
  ecoplan::GridSpec spec;
  spec.s_start = opts.s_start.value_or(road.start());
  spec.s_goal = opts.s_goal.value_or(road.end());
  spec.ds = opts.ds;
  spec.v_min = opts.v_min;
  spec.v_max = opts.v_max;
  spec.dv = opts.dv;
  if (opts.v_init) {
    spec.v_init = *opts.v_init;
  } else if (opts.v_init_kmh) {
    spec.v_init = *opts.v_init_kmh * kKmhToMps;
  } else {
    throw std::invalid_argument("missing --v-init (or --v-init-kmh)");
  }
  if (opts.v_goal) {
    spec.v_goal = *opts.v_goal;
  } else if (opts.v_goal_kmh) {
    spec.v_goal = *opts.v_goal_kmh * kKmhToMps;
  } else {
    throw std::invalid_argument("missing --v-goal (or --v-goal-kmh)");
  }
  spec.validate();
  return spec;
}

void write_file(const std::filesystem::path & path, const std::string & content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
}

int run_plan(
  const std::string & road_path, const std::string & vehicle_path,
  const GridOptions & grid_opts, const std::string & method,
  const std::string & heuristic_name, const std::string & out_dir)
{
  const ecoplan::VehicleParams params = ecoplan::load_vehicle_config(vehicle_path);
  const ecoplan::RoadProfile raw_road = ecoplan::load_road_csv(road_path);
  const ecoplan::GridSpec spec = make_grid(grid_opts, raw_road);
  const ecoplan::RoadProfile road = raw_road.resampled(spec.s_start, spec.s_goal, spec.ds);

  ecoplan::PlanResult result;
  if (method == "dp") {
    const ecoplan::CostToGoTable table = ecoplan::solve(spec, params, road);
    result = ecoplan::extract_trajectory(table, spec, params, road);
  } else {
    ecoplan::HeuristicKind kind = ecoplan::HeuristicKind::Proposed;
    if (heuristic_name == "zero") {
      kind = ecoplan::HeuristicKind::Zero;
    } else if (heuristic_name == "soa") {
      kind = ecoplan::HeuristicKind::SoA;
    }
    result = ecoplan::plan(spec, params, road, kind);
  }

  if (!result.found) {
    std::cerr << "no feasible trajectory from v_init to v_goal on this grid\n";
    return kExitNoPath;
  }

  std::filesystem::create_directories(out_dir);
  std::ostringstream csv;
  ecoplan::write_trajectory_csv(csv, result);
  write_file(std::filesystem::path(out_dir) / "trajectory.csv", csv.str());

  nlohmann::ordered_json summary;
  summary["method"] = method;
  summary["heuristic"] = (method == "dp") ? "-" : heuristic_name;
  summary["total_energy_J"] = result.total_energy;
  summary["nodes_expanded"] = result.nodes_expanded;
  summary["nodes_generated"] = result.nodes_generated;
  summary["reopen_count"] = result.reopen_count;
  summary["trajectory_points"] = result.trajectory.size();
  write_file(std::filesystem::path(out_dir) / "summary.json", summary.dump(2) + "\n");

  std::cout << "total energy: " << ecoplan::format_double(result.total_energy)
            << " J over " << result.trajectory.size() << " points ("
            << result.nodes_expanded << " nodes expanded)\n";
  return kExitOk;
}

int run_compare(
  const std::string & road_path, const std::string & vehicle_path,
  const GridOptions & grid_opts, const std::string & out_dir)
{
  const ecoplan::VehicleParams params = ecoplan::load_vehicle_config(vehicle_path);
  const ecoplan::RoadProfile raw_road = ecoplan::load_road_csv(road_path);
  const ecoplan::GridSpec spec = make_grid(grid_opts, raw_road);
  const ecoplan::RoadProfile road = raw_road.resampled(spec.s_start, spec.s_goal, spec.ds);

  const ecoplan::CompareReport report = ecoplan::compare(spec, params, road);
  if (!report.rows.empty() && !std::isfinite(report.rows.front().total_energy_J)) {
    std::cerr << "no feasible trajectory from v_init to v_goal on this grid\n";
    return kExitNoPath;
  }

  std::filesystem::create_directories(out_dir);
  write_file(std::filesystem::path(out_dir) / "report.txt", report.to_text());
  write_file(std::filesystem::path(out_dir) / "report.json", report.to_json());
  write_file(std::filesystem::path(out_dir) / "explored_nodes.csv", report.explored_csv());
  std::cout << report.to_text();
  return kExitOk;
}

int run_vstar(const std::string & vehicle_path, double v_min, double v_max)
{
  const ecoplan::VehicleParams params = ecoplan::load_vehicle_config(vehicle_path);
  const double p_tot = ecoplan::total_power_equivalent(params);
  const double v_star = ecoplan::optimal_cruise_velocity(params, v_min, v_max);
  const double f_v_min = ecoplan::virtual_force(params, v_star);
  if (p_tot == 0.0) {
    std::cout << "warning: P_tot = 0, the virtual force has no interior minimum; "
      "reporting the lower clamp\n";
  }
  std::cout << "optimal cruising velocity: " << ecoplan::format_double(v_star) << " m/s ("
            << ecoplan::format_double(v_star * 3.6) << " km/h)\n"
            << "minimum virtual force:     " << ecoplan::format_double(f_v_min) << " N\n";
  return kExitOk;
}

int run_dump_costtogo(
  const std::string & road_path, const std::string & vehicle_path,
  const GridOptions & grid_opts, const std::string & out_path)
{
  const ecoplan::VehicleParams params = ecoplan::load_vehicle_config(vehicle_path);
  const ecoplan::RoadProfile raw_road = ecoplan::load_road_csv(road_path);
  const ecoplan::GridSpec spec = make_grid(grid_opts, raw_road);
  const ecoplan::RoadProfile road = raw_road.resampled(spec.s_start, spec.s_goal, spec.ds);

  const ecoplan::CostToGoTable table = ecoplan::solve(spec, params, road);
  if (out_path.empty() || out_path == "-") {
    ecoplan::dump_cost_to_go_csv(std::cout, table, spec);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + out_path);
    }
    ecoplan::dump_cost_to_go_csv(out, table, spec);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Energy-optimal velocity trajectory planner over a road elevation profile"};
  app.require_subcommand(1);

  std::string road_path;
  std::string vehicle_path;
  std::string out_dir = ".";
  std::string method = "astar";
  std::string heuristic_name = "pro";
  std::string dump_path;
  double vstar_v_min = 0.01;
  double vstar_v_max = 100.0;
  GridOptions plan_grid;
  GridOptions compare_grid;
  GridOptions dump_grid;

  auto * plan_cmd = app.add_subcommand("plan", "Plan one trajectory and write CSV + JSON");
  plan_cmd->add_option("--road", road_path, "Road profile CSV")->required();
  plan_cmd->add_option("--vehicle", vehicle_path, "Vehicle config file")->required();
  add_grid_options(plan_cmd, plan_grid);
  plan_cmd->add_option("--method", method, "Planner: dp or astar")
  ->check(CLI::IsMember({"dp", "astar"}))->capture_default_str();
  plan_cmd->add_option("--heuristic", heuristic_name, "Heuristic: zero, soa or pro")
  ->check(CLI::IsMember({"zero", "soa", "pro"}))->capture_default_str();
  plan_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

  auto * compare_cmd = app.add_subcommand(
    "compare", "Run DP and A* with both heuristics, write a comparison report");
  compare_cmd->add_option("--road", road_path, "Road profile CSV")->required();
  compare_cmd->add_option("--vehicle", vehicle_path, "Vehicle config file")->required();
  add_grid_options(compare_cmd, compare_grid);
  compare_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

  auto * vstar_cmd = app.add_subcommand(
    "vstar", "Print the optimal cruising velocity and minimum virtual force");
  vstar_cmd->add_option("--vehicle", vehicle_path, "Vehicle config file")->required();
  vstar_cmd->add_option("--v-min", vstar_v_min, "Lower clamp [m/s]")->capture_default_str();
  vstar_cmd->add_option("--v-max", vstar_v_max, "Upper clamp [m/s]")->capture_default_str();

  auto * dump_cmd = app.add_subcommand(
    "dump-costtogo", "Dump the exact cost-to-go table as CSV");
  dump_cmd->add_option("--road", road_path, "Road profile CSV")->required();
  dump_cmd->add_option("--vehicle", vehicle_path, "Vehicle config file")->required();
  add_grid_options(dump_cmd, dump_grid);
  dump_cmd->add_option("--out", dump_path, "Output file ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan_cmd->parsed()) {
      return run_plan(road_path, vehicle_path, plan_grid, method, heuristic_name, out_dir);
    }
    if (compare_cmd->parsed()) {
      return run_compare(road_path, vehicle_path, compare_grid, out_dir);
    }
    if (vstar_cmd->parsed()) {
      return run_vstar(vehicle_path, vstar_v_min, vstar_v_max);
    }
    if (dump_cmd->parsed()) {
      return run_dump_costtogo(road_path, vehicle_path, dump_grid, dump_path);
    }
  } catch (const ecoplan::ParseError & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
