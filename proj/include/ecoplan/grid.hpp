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

#ifndef ECOPLAN_GRID_HPP_
#define ECOPLAN_GRID_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "ecoplan/model.hpp"

namespace ecoplan
{

/// Discretization of the (distance, velocity) state space. Stage k sits at
/// s_start + k*ds, velocity index j at v_min + j*dv. Both ranges must divide
/// evenly and v_init/v_goal must lie on the velocity grid.
struct GridSpec
{
  double s_start = 0.0;
  double s_goal = 0.0;
  double ds = 0.0;
  double v_min = 0.0;
  double v_max = 0.0;
  double dv = 0.0;
  double v_init = 0.0;
  double v_goal = 0.0;

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;

  int num_stages() const;  ///< N_s; stages run 0..N_s inclusive
  int num_speeds() const;  ///< number of velocity grid points

  double stage_position(int stage) const {return s_start + ds * stage;}
  double speed(int vidx) const {return v_min + dv * vidx;}

  int v_init_index() const;
  int v_goal_index() const;
};

struct NodeId
{
  int stage = 0;
  int vidx = 0;

  friend bool operator==(const NodeId &, const NodeId &) = default;
};

struct NodeIdHash
{
  std::size_t operator()(const NodeId & n) const
  {
    return static_cast<std::size_t>(n.stage) * 1000003u +
           static_cast<std::size_t>(n.vidx);
  }
};

/// (s, v) of a grid node. Throws std::out_of_range for bad indices.
std::pair<double, double> node_state(const GridSpec & spec, NodeId n);

struct Successor
{
  NodeId node;
  double acceleration = 0.0;  ///< implied uniform acceleration over ds
};

/// All next-stage nodes reachable with acceleration inside [a_min, a_max],
/// ordered by ascending velocity index. Empty at the final stage.
std::vector<Successor> successors(const GridSpec & spec, const VehicleParams & p, NodeId n);

}  // namespace ecoplan

#endif  // ECOPLAN_GRID_HPP_
