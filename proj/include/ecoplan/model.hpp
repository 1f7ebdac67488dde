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

#ifndef ECOPLAN_MODEL_HPP_
#define ECOPLAN_MODEL_HPP_

#include <optional>
#include <vector>

namespace ecoplan
{

/// Point-mass longitudinal vehicle parameters. SI units throughout.
struct VehicleParams
{
  double m = 0.0;        ///< mass [kg]
  double rho_a = 0.0;    ///< air density [kg/m^3]
  double c_d = 0.0;      ///< aerodynamic drag coefficient [-]
  double A_f = 0.0;      ///< frontal area [m^2]
  double c_r = 0.0;      ///< rolling resistance coefficient [-]
  double g = 9.81;       ///< gravitational acceleration [m/s^2]
  double eta_max = 1.0;  ///< peak motor efficiency, in (0, 1]
  double P_aux = 0.0;    ///< constant auxiliary electrical load [W]
  double hr = 0.0;       ///< operator hourly rate [currency/h]
  double ep = 0.0;       ///< electricity price [currency/J]
  double a_min = 0.0;    ///< minimum longitudinal acceleration [m/s^2], < 0
  double a_max = 0.0;    ///< maximum longitudinal acceleration [m/s^2], > 0

  /// Optional propulsion force cap [N]; edges demanding more are infeasible.
  std::optional<double> F_prop_max;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// eta^(-sign(work)): positive work is divided by eta (motor losses),
/// negative work is scaled by eta (recuperation losses).
double efficiency_adjusted(double work, double eta);

/// Air drag + rolling resistance + slope force at speed v on grade angle
/// alpha. Requires v > 0.
double resistance_force(const VehicleParams & p, double v, double alpha);

/// P_aux plus the hourly operating cost converted to an equivalent power
/// through the electricity price. Requires ep > 0 whenever hr > 0.
double total_power_equivalent(const VehicleParams & p);

/// Energy drawn from (or returned to) the battery when the motor applies a
/// constant force over a distance. Requires distance >= 0.
double motor_energy(double force, double distance, double eta);

struct RoadSample
{
  double s = 0.0;          ///< distance along the road [m]
  double elevation = 0.0;  ///< elevation [m]
};

/// Piecewise-linear elevation profile over distance. Per-segment grade angle
/// is atan(dh/ds), constant within a segment. Immutable after construction.
class RoadProfile
{
public:
  /// Requires at least two samples with strictly increasing s.
  explicit RoadProfile(std::vector<RoadSample> samples);

  double start() const {return samples_.front().s;}
  double end() const {return samples_.back().s;}

  /// Linear interpolation. Requires start() <= s <= end().
  double elevation_at(double s) const;

  /// Grade angle of the segment containing s [rad].
  double slope_angle_at(double s) const;

  /// Integral of cos(alpha) from start() to s, piecewise linear in s.
  double cos_slope_integral(double s) const;

  /// Integral of sin(alpha) from start() to s, piecewise linear in s.
  double sin_slope_integral(double s) const;

  /// Same elevation shape re-sampled on the closed range [s_start, s_goal]
  /// with step ds, so that breakpoints line up with planner stages.
  RoadProfile resampled(double s_start, double s_goal, double ds) const;

  const std::vector<RoadSample> & samples() const {return samples_;}

private:
  std::size_t segment_index(double s) const;

  std::vector<RoadSample> samples_;
  std::vector<double> angle_;         // per segment
  std::vector<double> cos_integral_;  // per sample point
  std::vector<double> sin_integral_;  // per sample point
};

/// Energy bookkeeping for one constant-acceleration transition.
struct EdgeEnergy
{
  double motor_energy = 0.0;  ///< [J], negative when recuperating
  double aux_energy = 0.0;    ///< P_tot * dt [J]
  double total = 0.0;         ///< motor_energy + aux_energy [J]
  double dt = 0.0;            ///< traversal time [s]
  bool feasible = true;

  static EdgeEnergy infeasible();
};

/// Exact energy of the uniform-acceleration transition from (s1, v1) to
/// (s2, v2). Resistance is evaluated at v_mid = sqrt((v1^2+v2^2)/2), the
/// distance-mean of v^2 on the segment, and at the slope of the road segment
/// containing the midpoint. Returns an infeasible marker when the implied
/// acceleration leaves [a_min, a_max] or the force cap is exceeded.
EdgeEnergy edge_energy(
  const VehicleParams & p, const RoadProfile & road,
  double s1, double v1, double s2, double v2);

}  // namespace ecoplan

#endif  // ECOPLAN_MODEL_HPP_
