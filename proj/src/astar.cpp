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

#include "ecoplan/astar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "ecoplan/open_list.hpp"

namespace ecoplan
{

namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Status : std::uint8_t { Unseen, Open, Closed };

struct Record
{
  double g = kInf;
  NodeId parent{-1, -1};
  Status status = Status::Unseen;
  bool expanded = false;
};

using RecordMap = std::unordered_map<NodeId, Record, NodeIdHash>;

std::vector<TrajectoryPoint> assemble_trajectory(
  const std::vector<NodeId> & chain, const GridSpec & spec,
  const VehicleParams & params, const RoadProfile & road,
  double & total_energy)
{
  std::vector<TrajectoryPoint> points;
  points.reserve(chain.size());
  double t = 0.0;
  double energy = 0.0;
  auto [s0, v0] = node_state(spec, chain.front());
  points.push_back({s0, v0, 0.0, 0.0});
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto [s_prev, v_prev] = node_state(spec, chain[i - 1]);
    const auto [s_next, v_next] = node_state(spec, chain[i]);
    const EdgeEnergy e = edge_energy(params, road, s_prev, v_prev, s_next, v_next);
    t += e.dt;
    energy += e.total;
    points.push_back({s_next, v_next, t, energy});
  }
  total_energy = energy;
  return points;
}

}  // namespace

PlanResult plan(
  const GridSpec & spec, const VehicleParams & params,
  const RoadProfile & road, HeuristicKind kind)
{
  spec.validate();
  params.validate();
  if (road.start() > spec.s_start || road.end() < spec.s_goal) {
    throw std::invalid_argument("plan: road profile does not cover the planning range");
  }

  Heuristic heuristic(kind, params, road, spec);
  const NodeId start{0, spec.v_init_index()};
  const NodeId goal{spec.num_stages(), spec.v_goal_index()};

  PlanResult result;
  result.total_energy = kInf;

  RecordMap records;
  OpenList open;

  const double h_start = heuristic.at(start);
  if (std::isfinite(h_start)) {
    records[start] = Record{0.0, NodeId{-1, -1}, Status::Open, false};
    open.push_or_update(start, h_start, 0.0);
    result.nodes_generated = 1;
  }

  double incumbent = kInf;
  while (!open.empty()) {
    if (std::isfinite(incumbent)) {
      double frontier_floor = kInf;
      for (const OpenList::Entry & e : open.entries()) {
        frontier_floor = std::min(
          frontier_floor, e.g + heuristic.certified_lower_bound(e.node));
      }
      if (frontier_floor >= incumbent) {
        break;  // nothing on the frontier can still beat the incumbent
      }
    }

    const OpenList::Entry top = open.pop_min();
    Record & rec = records[top.node];
    rec.status = Status::Closed;
    if (!rec.expanded) {
      rec.expanded = true;
      ++result.nodes_expanded;
      result.expanded.push_back(top.node);
    }
    if (top.node == goal) {
      incumbent = rec.g;
      continue;
    }

    const auto [s1, v1] = node_state(spec, top.node);
    for (const Successor & succ : successors(spec, params, top.node)) {
      const auto [s2, v2] = node_state(spec, succ.node);
      const EdgeEnergy edge = edge_energy(params, road, s1, v1, s2, v2);
      if (!edge.feasible) {
        continue;
      }
      const double h = heuristic.at(succ.node);
      if (!std::isfinite(h)) {
        continue;
      }
      const double tentative = rec.g + edge.total;
      Record & next = records[succ.node];
      if (tentative < next.g) {
        next.g = tentative;
        next.parent = top.node;
        if (next.status == Status::Unseen) {
          ++result.nodes_generated;
        } else if (next.status == Status::Closed) {
          ++result.reopen_count;
          if (succ.node == goal) {
            incumbent = tentative;
          }
        }
        next.status = Status::Open;
        open.push_or_update(succ.node, tentative + h, tentative);
      }
    }
  }

  const auto goal_it = records.find(goal);
  if (goal_it == records.end() || !std::isfinite(goal_it->second.g)) {
    return result;
  }

  std::vector<NodeId> chain;
  chain.reserve(static_cast<std::size_t>(spec.num_stages()) + 1);
  for (NodeId n = goal; n.stage >= 0; n = records.at(n).parent) {
    chain.push_back(n);
    if (n == start) {
      break;
    }
  }
  std::reverse(chain.begin(), chain.end());

  result.found = true;
  result.trajectory = assemble_trajectory(chain, spec, params, road, result.total_energy);
  return result;
}

}  // namespace ecoplan
