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

#include "ecoplan/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ecoplan
{

namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}  // namespace

double virtual_force(const VehicleParams & p, double v)
{
  if (!(v > 0.0)) {
    throw std::domain_error("virtual_force: speed must be > 0");
  }
  return 0.5 * p.rho_a * p.c_d * p.A_f * v * v + total_power_equivalent(p) / v;
}

double optimal_cruise_velocity(const VehicleParams & p, double v_min, double v_max)
{
  const double aero = p.rho_a * p.c_d * p.A_f;
  if (!(aero > 0.0)) {
    throw std::invalid_argument("optimal_cruise_velocity: rho_a, c_d, A_f must be > 0");
  }
  const double unclamped = std::cbrt(total_power_equivalent(p) / aero);
  return std::clamp(unclamped, v_min, v_max);
}

CruiseData CruiseData::build(
  const VehicleParams & p, const RoadProfile & road,
  double v_min, double v_max)
{
  CruiseData cd;
  cd.p_tot = total_power_equivalent(p);
  cd.v_star = optimal_cruise_velocity(p, v_min, v_max);
  cd.f_v_min = virtual_force(p, cd.v_star);
  cd.road = &road;
  return cd;
}

double cruise_work(const CruiseData & cd, double s_i, double s_f)
{
  if (!(s_f >= s_i)) {
    throw std::domain_error("cruise_work: s_f must be >= s_i");
  }
  return cd.f_v_min * (s_f - s_i);
}

RampWork ramp_work(const VehicleParams & p, double v1, double v2, double a)
{
  if (v1 < 0.0 || v2 < 0.0) {
    throw std::domain_error("ramp_work: speeds must be >= 0");
  }
  if (v1 == v2) {
    return RampWork{};
  }
  if (a == 0.0 || (v2 - v1) / a <= 0.0) {
    throw std::domain_error("ramp_work: acceleration sign inconsistent with speed change");
  }
  const double duration = (v2 - v1) / a;
  const double drag =
    0.5 * p.rho_a * p.c_d * p.A_f * (v2 * v2 * v2 * v2 - v1 * v1 * v1 * v1) / (4.0 * a);
  RampWork w;
  w.energy = drag + total_power_equivalent(p) * duration;
  w.distance = (v2 * v2 - v1 * v1) / (2.0 * a);
  return w;
}

std::optional<double> velocity_switch_point(
  double v_i, double v_f, double a1, double a2, double s)
{
  const double denom = a2 - a1;
  if (denom == 0.0) {
    return std::nullopt;
  }
  const double radicand = (2.0 * a1 * a2 * s + a2 * v_i * v_i - a1 * v_f * v_f) / denom;
  if (radicand < 0.0) {
    return std::nullopt;
  }
  return std::sqrt(radicand);
}

double drag_aux_lower_bound(
  const VehicleParams & p, const CruiseData & cd,
  double v_i, double v_f, double s_i, double s_f)
{
  if (!(s_f >= s_i)) {
    throw std::domain_error("drag_aux_lower_bound: s_f must be >= s_i");
  }
  if (!(v_i > 0.0) || !(v_f > 0.0)) {
    throw std::domain_error("drag_aux_lower_bound: speeds must be > 0");
  }
  const double d = s_f - s_i;
  const double vs = cd.v_star;
  if (d == 0.0) {
    return v_i == v_f ? 0.0 : kInf;
  }

  double a1 = 0.0;
  double s1 = 0.0;
  if (v_i != vs) {
    a1 = v_i > vs ? p.a_min : p.a_max;
    s1 = (vs * vs - v_i * v_i) / (2.0 * a1);
  }
  double a2 = 0.0;
  double s2 = 0.0;
  if (v_f != vs) {
    a2 = v_f < vs ? p.a_min : p.a_max;
    s2 = (v_f * v_f - vs * vs) / (2.0 * a2);
  }

  if (s1 + s2 <= d) {
    const double ramp_in = (v_i == vs) ? 0.0 : ramp_work(p, v_i, vs, a1).energy;
    const double ramp_out = (v_f == vs) ? 0.0 : ramp_work(p, vs, v_f, a2).energy;
    return ramp_in + cd.f_v_min * (d - s1 - s2) + ramp_out;
  }

  // Ramps do not fit. With v_i and v_f on opposite sides of v_star (or one
  // of them already at v_star, where the single ramp alone overshoots), the
  // transfer is unreachable under the acceleration limits.
  if (v_i == vs || v_f == vs || (v_i > vs) != (v_f > vs)) {
    return kInf;
  }

  const auto vx_opt = velocity_switch_point(v_i, v_f, a1, a2, d);
  if (!vx_opt) {
    return kInf;
  }
  double vx = *vx_opt;
  const bool below = v_i < vs;
  const double tol = 1e-9 * std::max(1.0, std::max(v_i, v_f));
  if (below) {
    if (vx < std::max(v_i, v_f) - tol) {
      return kInf;  // even the extremal ramp pair cannot bridge v_i -> v_f in d
    }
    vx = std::max({vx, v_i, v_f});
  } else {
    if (vx > std::min(v_i, v_f) + tol) {
      return kInf;
    }
    vx = std::min({vx, v_i, v_f});
  }
  const double ramp_in = (vx == v_i) ? 0.0 : ramp_work(p, v_i, vx, a1).energy;
  const double ramp_out = (vx == v_f) ? 0.0 : ramp_work(p, vx, v_f, a2).energy;
  return ramp_in + ramp_out;
}

double cost_to_go_soa(
  const VehicleParams & p, const CruiseData & cd,
  double s_i, double v_i, double s_f, double v_f)
{
  if (!(s_f >= s_i)) {
    throw std::domain_error("cost_to_go_soa: s_f must be >= s_i");
  }
  const RoadProfile & road = *cd.road;
  const double kinetic = 0.5 * p.m * (v_f * v_f - v_i * v_i);
  const double potential = p.m * p.g * (road.elevation_at(s_f) - road.elevation_at(s_i));
  const double rolling =
    p.c_r * p.m * p.g * (road.cos_slope_integral(s_f) - road.cos_slope_integral(s_i));
  return efficiency_adjusted(kinetic + potential + rolling, p.eta_max);
}

double cost_to_go_proposed(
  const VehicleParams & p, const CruiseData & cd,
  double s_i, double v_i, double s_f, double v_f)
{
  const double bound = drag_aux_lower_bound(p, cd, v_i, v_f, s_i, s_f);
  if (!std::isfinite(bound)) {
    return kInf;
  }
  return cost_to_go_soa(p, cd, s_i, v_i, s_f, v_f) + bound;
}

Heuristic::Heuristic(
  HeuristicKind kind, const VehicleParams & p,
  const RoadProfile & road, const GridSpec & spec)
: kind_(kind),
  params_(p),
  spec_(spec),
  cruise_(CruiseData::build(p, road, spec.v_min, spec.v_max)),
  goal_vidx_(spec.v_goal_index()),
  goal_speed_(spec.speed(spec.v_goal_index()))
{
  const int stages = spec_.num_stages();
  elevation_.resize(stages + 1);
  roll_integral_.assign(stages + 1, 0.0);
  sin_integral_.assign(stages + 1, 0.0);
  for (int k = 0; k <= stages; ++k) {
    elevation_[k] = road.elevation_at(spec_.stage_position(k));
  }
  for (int k = 0; k < stages; ++k) {
    const double mid = spec_.stage_position(k) + 0.5 * spec_.ds;
    const double alpha = road.slope_angle_at(mid);
    roll_integral_[k + 1] = roll_integral_[k] + std::cos(alpha) * spec_.ds;
    sin_integral_[k + 1] = sin_integral_[k] + std::sin(alpha) * spec_.ds;
  }
  const std::size_t nodes =
    static_cast<std::size_t>(stages + 1) * static_cast<std::size_t>(spec_.num_speeds());
  memo_.assign(nodes, kNan);
  certified_memo_.assign(nodes, kNan);
  drag_aux_memo_.assign(nodes, kNan);
}

std::size_t Heuristic::index(NodeId n) const
{
  return static_cast<std::size_t>(n.stage) * static_cast<std::size_t>(spec_.num_speeds()) +
         static_cast<std::size_t>(n.vidx);
}

double Heuristic::drag_aux_bound(NodeId n)
{
  double & slot = drag_aux_memo_[index(n)];
  if (std::isnan(slot)) {
    slot = drag_aux_lower_bound(
      params_, cruise_, spec_.speed(n.vidx), goal_speed_,
      spec_.stage_position(n.stage), spec_.s_goal);
  }
  return slot;
}

double Heuristic::at(NodeId n)
{
  double & slot = memo_[index(n)];
  if (!std::isnan(slot)) {
    return slot;
  }
  const int stages = spec_.num_stages();
  if (n.stage == stages) {
    slot = (n.vidx == goal_vidx_) ? 0.0 : kInf;
    return slot;
  }
  switch (kind_) {
    case HeuristicKind::Zero:
      slot = 0.0;
      break;
    case HeuristicKind::SoA:
    case HeuristicKind::Proposed: {
        const double v = spec_.speed(n.vidx);
        const double kinetic = 0.5 * params_.m * (goal_speed_ * goal_speed_ - v * v);
        const double potential = params_.m * params_.g * (elevation_[stages] - elevation_[n.stage]);
        const double rolling = params_.c_r * params_.m * params_.g *
          (roll_integral_[stages] - roll_integral_[n.stage]);
        const double base = efficiency_adjusted(kinetic + potential + rolling, params_.eta_max);
        if (kind_ == HeuristicKind::SoA) {
          slot = base;
        } else {
          const double bound = drag_aux_bound(n);
          slot = std::isfinite(bound) ? base + bound : kInf;
        }
        break;
      }
  }
  return slot;
}

double Heuristic::certified_lower_bound(NodeId n)
{
  double & slot = certified_memo_[index(n)];
  if (!std::isnan(slot)) {
    return slot;
  }
  const int stages = spec_.num_stages();
  if (n.stage == stages) {
    slot = (n.vidx == goal_vidx_) ? 0.0 : kInf;
    return slot;
  }
  const double v = spec_.speed(n.vidx);
  const double d = spec_.s_goal - spec_.stage_position(n.stage);
  const double kinetic = 0.5 * params_.m * (goal_speed_ * goal_speed_ - v * v);
  const double slope = params_.m * params_.g * (sin_integral_[stages] - sin_integral_[n.stage]);
  const double rolling = params_.c_r * params_.m * params_.g *
    (roll_integral_[stages] - roll_integral_[n.stage]);
  const double mech = kinetic + slope + rolling;

  const double bound = drag_aux_bound(n);
  if (!std::isfinite(bound)) {
    slot = kInf;
    return slot;
  }
  const double air_floor =
    0.5 * params_.rho_a * params_.c_d * params_.A_f * spec_.v_min * spec_.v_min * d;

  // min over the feasible (air, aux) split of eta-adjusted motor work plus
  // auxiliary energy, given air >= air_floor and air + aux >= bound.
  const double eta = params_.eta_max;
  if (mech + air_floor >= 0.0) {
    slot = (mech + air_floor) / eta + bound - air_floor;
  } else if (mech + bound <= 0.0) {
    slot = eta * (mech + bound);
  } else {
    slot = mech + bound;
  }
  return slot;
}

}  // namespace ecoplan
