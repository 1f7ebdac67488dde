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

#ifndef ECOPLAN_DP_HPP_
#define ECOPLAN_DP_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ecoplan/astar.hpp"
#include "ecoplan/grid.hpp"
#include "ecoplan/model.hpp"

namespace ecoplan
{

/// Exact cost-to-go for every grid node, from a full backward sweep.
/// J is +inf where the goal is unreachable; the policy stores the chosen
/// successor velocity index (-1 where none is feasible).
class CostToGoTable
{
public:
  CostToGoTable(int stages, int speeds);

  double cost_to_go(NodeId n) const {return j_[index(n)];}
  int policy(NodeId n) const {return policy_[index(n)];}

  int stages() const {return stages_;}
  int speeds() const {return speeds_;}

  /// Nodes touched by the sweep; the Table-1-style exploration figure.
  std::int64_t evaluated_states() const {return evaluated_states_;}

private:
  friend CostToGoTable solve(const GridSpec &, const VehicleParams &, const RoadProfile &);

  std::size_t index(NodeId n) const;

  int stages_;
  int speeds_;
  std::int64_t evaluated_states_ = 0;
  std::vector<double> j_;
  std::vector<int> policy_;
};

/// Backward dynamic programming over the full grid. Successor ties resolve
/// to the lower velocity index, matching the A* tie rule.
CostToGoTable solve(const GridSpec & spec, const VehicleParams & params, const RoadProfile & road);

/// Follows the stored policy from the start node. total_energy accumulates
/// the same edge values forward, so it matches J(start) up to rounding.
PlanResult extract_trajectory(
  const CostToGoTable & table, const GridSpec & spec,
  const VehicleParams & params, const RoadProfile & road);

/// CSV dump `stage,vidx,s_m,v_mps,J_joule`, one row per grid node.
void dump_cost_to_go_csv(std::ostream & out, const CostToGoTable & table, const GridSpec & spec);

}  // namespace ecoplan

#endif  // ECOPLAN_DP_HPP_
