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

#include "ecoplan/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecoplan
{

namespace
{

// Nearest integer count if `ratio` is integral within 1e-9, else -1.
long integral_count(double ratio)
{
  const long n = std::lround(ratio);
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * (1.0 + std::abs(ratio))) {
    return -1;
  }
  return n;
}

int grid_speed_index(const GridSpec & spec, double v, const char * label)
{
  const double ratio = (v - spec.v_min) / spec.dv;
  const long j = std::lround(ratio);
  if (j < 0 || j >= spec.num_speeds() ||
    std::abs(spec.speed(static_cast<int>(j)) - v) > 1e-9 * (1.0 + std::abs(v)))
  {
    throw std::invalid_argument(std::string("GridSpec: ") + label + " is not on the velocity grid");
  }
  return static_cast<int>(j);
}

}  // namespace

void GridSpec::validate() const
{
  if (!(s_goal > s_start)) {
    throw std::invalid_argument("GridSpec: s_goal must be > s_start");
  }
  if (!(ds > 0.0)) {
    throw std::invalid_argument("GridSpec: ds must be > 0");
  }
  if (!(dv > 0.0)) {
    throw std::invalid_argument("GridSpec: dv must be > 0");
  }
  if (!(v_min > 0.0) || !(v_max >= v_min)) {
    throw std::invalid_argument("GridSpec: need 0 < v_min <= v_max");
  }
  if (integral_count((s_goal - s_start) / ds) < 0) {
    throw std::invalid_argument("GridSpec: (s_goal - s_start) must be a multiple of ds");
  }
  if (v_max > v_min && integral_count((v_max - v_min) / dv) < 0) {
    throw std::invalid_argument("GridSpec: (v_max - v_min) must be a multiple of dv");
  }
  if (v_init < v_min || v_init > v_max || v_goal < v_min || v_goal > v_max) {
    throw std::invalid_argument("GridSpec: v_init and v_goal must lie in [v_min, v_max]");
  }
  grid_speed_index(*this, v_init, "v_init");
  grid_speed_index(*this, v_goal, "v_goal");
}

int GridSpec::num_stages() const
{
  return static_cast<int>(integral_count((s_goal - s_start) / ds));
}

int GridSpec::num_speeds() const
{
  if (v_max == v_min) {
    return 1;
  }
  return static_cast<int>(integral_count((v_max - v_min) / dv)) + 1;
}

int GridSpec::v_init_index() const
{
  return grid_speed_index(*this, v_init, "v_init");
}

int GridSpec::v_goal_index() const
{
  return grid_speed_index(*this, v_goal, "v_goal");
}

std::pair<double, double> node_state(const GridSpec & spec, NodeId n)
{
  if (n.stage < 0 || n.stage > spec.num_stages() || n.vidx < 0 || n.vidx >= spec.num_speeds()) {
    throw std::out_of_range("node_state: index outside grid");
  }
  return {spec.stage_position(n.stage), spec.speed(n.vidx)};
}

std::vector<Successor> successors(const GridSpec & spec, const VehicleParams & p, NodeId n)
{
  std::vector<Successor> out;
  if (n.stage >= spec.num_stages()) {
    return out;
  }
  const double v1 = spec.speed(n.vidx);
  const int speeds = spec.num_speeds();
  for (int j = 0; j < speeds; ++j) {
    const double v2 = spec.speed(j);
    const double a = (v2 * v2 - v1 * v1) / (2.0 * spec.ds);
    if (a >= p.a_min && a <= p.a_max) {
      out.push_back({NodeId{n.stage + 1, j}, a});
    }
  }
  return out;
}

}  // namespace ecoplan
