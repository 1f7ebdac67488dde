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

#ifndef ECOPLAN_EXPERIMENT_HPP_
#define ECOPLAN_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ecoplan/astar.hpp"
#include "ecoplan/dp.hpp"
#include "ecoplan/grid.hpp"
#include "ecoplan/model.hpp"

namespace ecoplan
{

/// Estimation error statistics of one method against the exact cost-to-go,
/// taken over every grid node with finite cost-to-go.
struct MethodReport
{
  std::string method;
  std::int64_t nodes_expanded = 0;
  double avg_err_J = 0.0;
  double min_err_J = 0.0;
  double max_err_J = 0.0;
  double total_energy_J = 0.0;
  std::int64_t sample_count = 0;
};

/// Which planners expanded a node; for explored-space plots.
struct ExploredNode
{
  NodeId node;
  bool by_soa = false;
  bool by_pro = false;
};

struct CompareReport
{
  std::vector<MethodReport> rows;  ///< ordered DP, A* h_SoA, A* h_pro
  std::vector<ExploredNode> explored;

  std::string to_text() const;
  std::string to_json() const;
  std::string explored_csv() const;  ///< `stage,vidx,expanded_by`
};

/// Runs the exact solver once, evaluates both heuristics over every
/// finite-cost node, and plans with each heuristic, mirroring the
/// nodes-explored / error-statistics comparison methodology.
CompareReport compare(const GridSpec & spec, const VehicleParams & params, const RoadProfile & road);

}  // namespace ecoplan

#endif  // ECOPLAN_EXPERIMENT_HPP_
