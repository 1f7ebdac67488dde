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

#include "ecoplan/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ecoplan
{

namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char * message)
{
  if (!ok) {
    throw std::invalid_argument(message);
  }
}
}  // namespace

void VehicleParams::validate() const
{
  require(m > 0.0, "VehicleParams: m must be > 0");
  require(rho_a > 0.0, "VehicleParams: rho_a must be > 0");
  require(c_d > 0.0, "VehicleParams: c_d must be > 0");
  require(A_f > 0.0, "VehicleParams: A_f must be > 0");
  require(c_r >= 0.0, "VehicleParams: c_r must be >= 0");
  require(g > 0.0, "VehicleParams: g must be > 0");
  require(eta_max > 0.0 && eta_max <= 1.0, "VehicleParams: eta_max must be in (0, 1]");
  require(P_aux >= 0.0, "VehicleParams: P_aux must be >= 0");
  require(hr >= 0.0, "VehicleParams: hr must be >= 0");
  require(!(hr > 0.0) || ep > 0.0, "VehicleParams: ep must be > 0 when hr > 0");
  require(a_min < 0.0, "VehicleParams: a_min must be < 0");
  require(a_max > 0.0, "VehicleParams: a_max must be > 0");
  if (F_prop_max) {
    require(*F_prop_max > 0.0, "VehicleParams: F_prop_max must be > 0");
  }
}

double efficiency_adjusted(double work, double eta)
{
  if (work > 0.0) {
    return work / eta;
  }
  if (work < 0.0) {
    return work * eta;
  }
  return 0.0;
}

double resistance_force(const VehicleParams & p, double v, double alpha)
{
  if (!(v > 0.0)) {
    throw std::domain_error("resistance_force: speed must be > 0");
  }
  const double drag = 0.5 * p.rho_a * p.c_d * p.A_f * v * v;
  const double rolling = p.c_r * p.m * p.g * std::cos(alpha);
  const double slope = p.m * p.g * std::sin(alpha);
  return drag + rolling + slope;
}

double total_power_equivalent(const VehicleParams & p)
{
  if (p.hr > 0.0 && !(p.ep > 0.0)) {
    throw std::invalid_argument("total_power_equivalent: ep must be > 0 when hr > 0");
  }
  if (p.hr == 0.0) {
    return p.P_aux;
  }
  return p.P_aux + (p.hr / 3600.0) / p.ep;
}

double motor_energy(double force, double distance, double eta)
{
  if (distance < 0.0) {
    throw std::domain_error("motor_energy: distance must be >= 0");
  }
  return efficiency_adjusted(force * distance, eta);
}

RoadProfile::RoadProfile(std::vector<RoadSample> samples)
: samples_(std::move(samples))
{
  if (samples_.size() < 2) {
    throw std::invalid_argument("RoadProfile: need at least two samples");
  }
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (!(samples_[i].s > samples_[i - 1].s)) {
      throw std::invalid_argument(
              "RoadProfile: sample distances must be strictly increasing (sample " +
              std::to_string(i + 1) + ")");
    }
  }
  angle_.resize(samples_.size() - 1);
  cos_integral_.assign(samples_.size(), 0.0);
  sin_integral_.assign(samples_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < samples_.size(); ++i) {
    const double ds = samples_[i + 1].s - samples_[i].s;
    const double dh = samples_[i + 1].elevation - samples_[i].elevation;
    angle_[i] = std::atan(dh / ds);
    cos_integral_[i + 1] = cos_integral_[i] + std::cos(angle_[i]) * ds;
    sin_integral_[i + 1] = sin_integral_[i] + std::sin(angle_[i]) * ds;
  }
}

std::size_t RoadProfile::segment_index(double s) const
{
  if (s < start() || s > end()) {
    throw std::out_of_range("RoadProfile: query outside sampled range");
  }
  const auto it = std::upper_bound(
    samples_.begin(), samples_.end(), s,
    [](double value, const RoadSample & sample) {return value < sample.s;});
  std::size_t idx = static_cast<std::size_t>(it - samples_.begin());
  if (idx > 0) {
    --idx;
  }
  return std::min(idx, samples_.size() - 2);
}

double RoadProfile::elevation_at(double s) const
{
  const std::size_t i = segment_index(s);
  const RoadSample & a = samples_[i];
  const RoadSample & b = samples_[i + 1];
  const double t = (s - a.s) / (b.s - a.s);
  return a.elevation + t * (b.elevation - a.elevation);
}

double RoadProfile::slope_angle_at(double s) const
{
  return angle_[segment_index(s)];
}

double RoadProfile::cos_slope_integral(double s) const
{
  const std::size_t i = segment_index(s);
  return cos_integral_[i] + std::cos(angle_[i]) * (s - samples_[i].s);
}

double RoadProfile::sin_slope_integral(double s) const
{
  const std::size_t i = segment_index(s);
  return sin_integral_[i] + std::sin(angle_[i]) * (s - samples_[i].s);
}

RoadProfile RoadProfile::resampled(double s_start, double s_goal, double ds) const
{
  if (!(ds > 0.0) || !(s_goal > s_start)) {
    throw std::invalid_argument("RoadProfile::resampled: need s_goal > s_start and ds > 0");
  }
  const double steps_real = (s_goal - s_start) / ds;
  const long steps = std::lround(steps_real);
  if (steps < 1 || std::abs(steps_real - static_cast<double>(steps)) > 1e-9 * (1.0 + steps_real)) {
    throw std::invalid_argument("RoadProfile::resampled: range is not a multiple of ds");
  }
  std::vector<RoadSample> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (long k = 0; k <= steps; ++k) {
    const double s = (k == steps) ? s_goal : s_start + static_cast<double>(k) * ds;
    out.push_back({s, elevation_at(s)});
  }
  return RoadProfile(std::move(out));
}

EdgeEnergy EdgeEnergy::infeasible()
{
  EdgeEnergy e;
  e.total = kInf;
  e.feasible = false;
  return e;
}

EdgeEnergy edge_energy(
  const VehicleParams & p, const RoadProfile & road,
  double s1, double v1, double s2, double v2)
{
  if (!(s2 > s1)) {
    throw std::domain_error("edge_energy: s2 must be > s1");
  }
  if (!(v1 > 0.0) || !(v2 > 0.0)) {
    throw std::domain_error("edge_energy: speeds must be > 0");
  }
  const double ds = s2 - s1;
  const double a = (v2 * v2 - v1 * v1) / (2.0 * ds);
  if (a < p.a_min || a > p.a_max) {
    return EdgeEnergy::infeasible();
  }
  const double v_mid = std::sqrt(0.5 * (v1 * v1 + v2 * v2));
  const double alpha = road.slope_angle_at(0.5 * (s1 + s2));
  const double force = p.m * a + resistance_force(p, v_mid, alpha);
  if (p.F_prop_max && force > *p.F_prop_max) {
    return EdgeEnergy::infeasible();
  }
  EdgeEnergy e;
  e.dt = 2.0 * ds / (v1 + v2);
  e.motor_energy = motor_energy(force, ds, p.eta_max);
  e.aux_energy = total_power_equivalent(p) * e.dt;
  e.total = e.motor_energy + e.aux_energy;
  return e;
}

}  // namespace ecoplan
