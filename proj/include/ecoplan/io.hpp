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

#ifndef ECOPLAN_IO_HPP_
#define ECOPLAN_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ecoplan/astar.hpp"
#include "ecoplan/model.hpp"

namespace ecoplan
{

/// Malformed input file; `line` is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string & file, int line, const std::string & message);
  int line() const {return line_;}

private:
  int line_;
};

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value);

/// Locale-independent parse of a full token; throws on trailing garbage.
double parse_double(const std::string & token, const std::string & file, int line);

/// Road CSV with header `s_m,elevation_m`, one sample per row,
/// '.' decimal separator, strictly increasing s.
RoadProfile load_road_csv(const std::string & path);
RoadProfile read_road_csv(std::istream & in, const std::string & name);

/// Flat key=value vehicle file mirroring the VehicleParams field names in SI
/// units ('#' starts a comment). Validates the parsed parameters.
VehicleParams load_vehicle_config(const std::string & path);
VehicleParams read_vehicle_config(std::istream & in, const std::string & name);

/// Trajectory CSV `s_m,v_mps,t_s,energy_J`, one row per trajectory point.
void write_trajectory_csv(std::ostream & out, const PlanResult & result);

}  // namespace ecoplan

#endif  // ECOPLAN_IO_HPP_
