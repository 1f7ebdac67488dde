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

#include "ecoplan/dp.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ecoplan/io.hpp"

namespace ecoplan
{

namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

CostToGoTable::CostToGoTable(int stages, int speeds)
: stages_(stages),
  speeds_(speeds),
  j_(static_cast<std::size_t>(stages + 1) * speeds, kInf),
  policy_(static_cast<std::size_t>(stages + 1) * speeds, -1)
{
}

std::size_t CostToGoTable::index(NodeId n) const
{
  if (n.stage < 0 || n.stage > stages_ || n.vidx < 0 || n.vidx >= speeds_) {
    throw std::out_of_range("CostToGoTable: index outside grid");
  }
  return static_cast<std::size_t>(n.stage) * speeds_ + n.vidx;
}

CostToGoTable solve(const GridSpec & spec, const VehicleParams & params, const RoadProfile & road)
{
  spec.validate();
  params.validate();
  if (road.start() > spec.s_start || road.end() < spec.s_goal) {
    throw std::invalid_argument("solve: road profile does not cover the planning range");
  }

  const int stages = spec.num_stages();
  const int speeds = spec.num_speeds();
  CostToGoTable table(stages, speeds);

  table.j_[table.index(NodeId{stages, spec.v_goal_index()})] = 0.0;
  table.evaluated_states_ = speeds;  // terminal stage initialization

  for (int stage = stages - 1; stage >= 0; --stage) {
    const double s1 = spec.stage_position(stage);
    const double s2 = spec.stage_position(stage + 1);
    for (int vidx = 0; vidx < speeds; ++vidx) {
      ++table.evaluated_states_;
      const NodeId node{stage, vidx};
      const double v1 = spec.speed(vidx);
      double best = kInf;
      int best_vidx = -1;
      for (const Successor & succ : successors(spec, params, node)) {
        const double tail = table.j_[table.index(succ.node)];
        if (!std::isfinite(tail)) {
          continue;
        }
        const EdgeEnergy edge = edge_energy(params, road, s1, v1, s2, spec.speed(succ.node.vidx));
        if (!edge.feasible) {
          continue;
        }
        const double candidate = edge.total + tail;
        if (candidate < best) {
          best = candidate;
          best_vidx = succ.node.vidx;
        }
      }
      table.j_[table.index(node)] = best;
      table.policy_[table.index(node)] = best_vidx;
    }
  }
  return table;
}

PlanResult extract_trajectory(
  const CostToGoTable & table, const GridSpec & spec,
  const VehicleParams & params, const RoadProfile & road)
{
  PlanResult result;
  result.total_energy = kInf;
  result.nodes_expanded = table.evaluated_states();

  NodeId node{0, spec.v_init_index()};
  if (!std::isfinite(table.cost_to_go(node))) {
    return result;
  }

  double t = 0.0;
  double energy = 0.0;
  auto [s, v] = node_state(spec, node);
  result.trajectory.push_back({s, v, 0.0, 0.0});
  while (node.stage < table.stages()) {
    const int next_vidx = table.policy(node);
    if (next_vidx < 0) {
      throw std::logic_error("extract_trajectory: policy hole on a finite-cost node");
    }
    const NodeId next{node.stage + 1, next_vidx};
    const auto [s1, v1] = node_state(spec, node);
    const auto [s2, v2] = node_state(spec, next);
    const EdgeEnergy edge = edge_energy(params, road, s1, v1, s2, v2);
    t += edge.dt;
    energy += edge.total;
    result.trajectory.push_back({s2, v2, t, energy});
    node = next;
  }
  result.found = true;
  result.total_energy = energy;
  return result;
}

void dump_cost_to_go_csv(std::ostream & out, const CostToGoTable & table, const GridSpec & spec)
{
  out << "stage,vidx,s_m,v_mps,J_joule\n";
  for (int stage = 0; stage <= table.stages(); ++stage) {
    for (int vidx = 0; vidx < table.speeds(); ++vidx) {
      const NodeId n{stage, vidx};
      const double j = table.cost_to_go(n);
      out << stage << ',' << vidx << ',' << format_double(spec.stage_position(stage)) << ','
          << format_double(spec.speed(vidx)) << ','
          << (std::isfinite(j) ? format_double(j) : "inf") << '\n';
    }
  }
}

}  // namespace ecoplan
