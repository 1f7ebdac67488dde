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

#ifndef ECOPLAN_ASTAR_HPP_
#define ECOPLAN_ASTAR_HPP_

#include <cstdint>
#include <vector>

#include "ecoplan/grid.hpp"
#include "ecoplan/heuristics.hpp"
#include "ecoplan/model.hpp"

namespace ecoplan
{

struct TrajectoryPoint
{
  double s = 0.0;                  ///< [m]
  double v = 0.0;                  ///< [m/s]
  double t = 0.0;                  ///< elapsed time [s]
  double cumulative_energy = 0.0;  ///< [J]
};

struct PlanResult
{
  bool found = false;
  std::vector<TrajectoryPoint> trajectory;  ///< start to goal when found
  double total_energy = 0.0;                ///< +inf when no path exists

  std::int64_t nodes_expanded = 0;   ///< distinct nodes popped from the open list
  std::int64_t nodes_generated = 0;  ///< distinct nodes ever inserted
  std::int64_t reopen_count = 0;     ///< closed nodes re-inserted after a g improvement

  std::vector<NodeId> expanded;  ///< expansion order, for exploration reports
};

/// A* over the stage DAG with f(n) = g(n) + h(n). The open list is a binary
/// heap with a hash table; g improvements re-key open nodes in place and
/// reopen closed ones, so negative (recuperation) edges and inconsistent
/// estimates are handled. Once the goal holds a cost, the search stops as
/// soon as no frontier node can beat it under the certified lower bound,
/// which reduces to the classic stop-at-goal-pop whenever the selected
/// heuristic never overestimates.
PlanResult plan(
  const GridSpec & spec, const VehicleParams & params,
  const RoadProfile & road, HeuristicKind kind);

}  // namespace ecoplan

#endif  // ECOPLAN_ASTAR_HPP_
