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

#ifndef ECOPLAN_HEURISTICS_HPP_
#define ECOPLAN_HEURISTICS_HPP_

#include <optional>
#include <vector>

#include "ecoplan/grid.hpp"
#include "ecoplan/model.hpp"

namespace ecoplan
{

enum class HeuristicKind
{
  Zero,      ///< h = 0, degrades A* to uniform-cost exploration
  SoA,       ///< kinetic + potential + rolling, efficiency-adjusted
  Proposed,  ///< SoA plus the drag/auxiliary lower bound
};

/// Per-distance cost of holding speed v: air drag force plus the
/// time-proportional power expressed as a force, P_tot / v. Requires v > 0.
double virtual_force(const VehicleParams & p, double v);

/// Speed minimizing the virtual force, cbrt(P_tot / (rho_a c_d A_f)),
/// clamped into [v_min, v_max]. With P_tot = 0 the minimum degenerates to
/// the lower clamp.
double optimal_cruise_velocity(const VehicleParams & p, double v_min, double v_max);

/// Optimal cruising state for one (vehicle, road, speed range) instance.
/// Holds a pointer to the road; the road must outlive the CruiseData.
struct CruiseData
{
  double v_star = 0.0;   ///< optimal cruising velocity [m/s]
  double f_v_min = 0.0;  ///< virtual force at v_star [N]
  double p_tot = 0.0;    ///< total power equivalent [W]
  const RoadProfile * road = nullptr;

  static CruiseData build(
    const VehicleParams & p, const RoadProfile & road,
    double v_min, double v_max);
};

/// Drag + auxiliary work of cruising the stretch [s_i, s_f] at v_star:
/// f_v_min * (s_f - s_i). A lower bound for any trajectory over the stretch.
double cruise_work(const CruiseData & cd, double s_i, double s_f);

struct RampWork
{
  double energy = 0.0;    ///< drag + auxiliary work [J]
  double distance = 0.0;  ///< distance covered by the ramp [m]
};

/// Closed-form drag + auxiliary work of a uniform-acceleration ramp from v1
/// to v2 at rate a. The drag term integrates v(t)^3 exactly:
///   (1/2) rho_a c_d A_f (v2^4 - v1^4) / (4 a) + P_tot (v2 - v1) / a.
/// Requires sign(a) == sign(v2 - v1); v1 == v2 returns {0, 0}.
RampWork ramp_work(const VehicleParams & p, double v1, double v2, double a);

/// Speed at which the acceleration flips from a1 to a2 so that the two ramps
/// v_i -> v_x -> v_f cover exactly distance s. Empty when the radicand is
/// negative (no such speed).
std::optional<double> velocity_switch_point(
  double v_i, double v_f, double a1, double a2, double s);

/// Lower bound on drag + auxiliary work for any acceleration-limited
/// trajectory from (s_i, v_i) to (s_f, v_f): ramp to v_star at the extremal
/// rate, cruise, ramp to v_f. When the ramps do not fit, the switch-point
/// trajectory is used; +inf when the transfer is unreachable.
double drag_aux_lower_bound(
  const VehicleParams & p, const CruiseData & cd,
  double v_i, double v_f, double s_i, double s_f);

/// Kinetic + potential + rolling work between two states with the
/// eta^(-sign) adjustment applied to the sum.
double cost_to_go_soa(
  const VehicleParams & p, const CruiseData & cd,
  double s_i, double v_i, double s_f, double v_f);

/// cost_to_go_soa plus drag_aux_lower_bound; no efficiency is applied to the
/// drag/auxiliary term since auxiliary power does not flow through the motor.
double cost_to_go_proposed(
  const VehicleParams & p, const CruiseData & cd,
  double s_i, double v_i, double s_f, double v_f);

/// Node-level cost-to-go estimator for one search instance. Evaluations are
/// memoized per node; at the final stage every velocity other than v_goal
/// maps to +inf (the goal velocity is a hard terminal constraint).
///
/// Besides the selected estimate, the evaluator exposes a certified lower
/// bound that never overestimates the true cost-to-go under this edge model.
/// It is built from per-edge inequalities only:
///   motor >= eta * F ds, air >= (1/2) rho_a c_d A_f v_min^2 per meter,
///   air + aux >= drag_aux_lower_bound,
/// and slope/rolling sums taken with the same per-stage angles the edge
/// costs use. Searches use it to decide when an incumbent is optimal, which
/// stays exact even where the selected estimate overestimates.
class Heuristic
{
public:
  Heuristic(
    HeuristicKind kind, const VehicleParams & p,
    const RoadProfile & road, const GridSpec & spec);

  double at(NodeId n);
  double certified_lower_bound(NodeId n);

  HeuristicKind kind() const {return kind_;}
  const CruiseData & cruise() const {return cruise_;}

private:
  double drag_aux_bound(NodeId n);
  std::size_t index(NodeId n) const;

  HeuristicKind kind_;
  VehicleParams params_;
  GridSpec spec_;
  CruiseData cruise_;
  int goal_vidx_;
  double goal_speed_;

  // Per-stage cumulative sums taken with the edge-midpoint slope convention.
  std::vector<double> elevation_;      // h(s_k)
  std::vector<double> roll_integral_;  // sum cos(alpha_j) ds for j < k
  std::vector<double> sin_integral_;   // sum sin(alpha_j) ds for j < k

  std::vector<double> memo_;
  std::vector<double> certified_memo_;
  std::vector<double> drag_aux_memo_;
};

}  // namespace ecoplan

#endif  // ECOPLAN_HEURISTICS_HPP_
