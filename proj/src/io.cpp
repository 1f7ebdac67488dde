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

#include "ecoplan/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace ecoplan
{

namespace
{

std::string strip(const std::string & text)
{
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string & line, char sep)
{
  std::vector<std::string> fields;
  std::string::size_type pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    if (next == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

ParseError::ParseError(const std::string & file, int line, const std::string & message)
: std::runtime_error(
    line > 0 ? file + ":" + std::to_string(line) + ": " + message : file + ": " + message),
  line_(line)
{
}

std::string format_double(double value)
{
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double parse_double(const std::string & token, const std::string & file, int line)
{
  const std::string text = strip(token);
  double value = 0.0;
  const char * begin = text.data();
  const char * end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end || text.empty()) {
    throw ParseError(file, line, "not a number: '" + text + "'");
  }
  return value;
}

RoadProfile read_road_csv(std::istream & in, const std::string & name)
{
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(name, 1, "empty road file");
  }
  ++line_no;
  if (strip(line) != "s_m,elevation_m") {
    throw ParseError(name, 1, "expected header 's_m,elevation_m'");
  }
  std::vector<RoadSample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) {
      continue;
    }
    const auto fields = split(strip(line), ',');
    if (fields.size() != 2) {
      throw ParseError(name, line_no, "expected two comma-separated fields");
    }
    RoadSample sample;
    sample.s = parse_double(fields[0], name, line_no);
    sample.elevation = parse_double(fields[1], name, line_no);
    if (!samples.empty() && !(sample.s > samples.back().s)) {
      throw ParseError(name, line_no, "distance column must be strictly increasing");
    }
    samples.push_back(sample);
  }
  if (samples.size() < 2) {
    throw ParseError(name, line_no, "need at least two road samples");
  }
  return RoadProfile(std::move(samples));
}

RoadProfile load_road_csv(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path, 0, "cannot open file");
  }
  return read_road_csv(in, path);
}

VehicleParams read_vehicle_config(std::istream & in, const std::string & name)
{
  std::map<std::string, double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    const std::string text = strip(line);
    if (text.empty()) {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ParseError(name, line_no, "expected 'key = value'");
    }
    const std::string key = strip(text.substr(0, eq));
    if (values.count(key)) {
      throw ParseError(name, line_no, "duplicate key '" + key + "'");
    }
    values[key] = parse_double(text.substr(eq + 1), name, line_no);
  }

  VehicleParams p;
  const auto take = [&](const char * key, double & field, std::optional<double> fallback) {
      const auto it = values.find(key);
      if (it != values.end()) {
        field = it->second;
        values.erase(it);
      } else if (fallback) {
        field = *fallback;
      } else {
        throw ParseError(name, 0, std::string("missing required key '") + key + "'");
      }
    };
  take("m", p.m, std::nullopt);
  take("rho_a", p.rho_a, std::nullopt);
  take("c_d", p.c_d, std::nullopt);
  take("A_f", p.A_f, std::nullopt);
  take("c_r", p.c_r, std::nullopt);
  take("g", p.g, 9.81);
  take("eta_max", p.eta_max, std::nullopt);
  take("P_aux", p.P_aux, std::nullopt);
  take("hr", p.hr, 0.0);
  take("ep", p.ep, 0.0);
  take("a_min", p.a_min, std::nullopt);
  take("a_max", p.a_max, std::nullopt);
  if (values.count("F_prop_max")) {
    p.F_prop_max = values.at("F_prop_max");
    values.erase("F_prop_max");
  }
  if (!values.empty()) {
    throw ParseError(name, 0, "unknown key '" + values.begin()->first + "'");
  }
  p.validate();
  return p;
}

VehicleParams load_vehicle_config(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path, 0, "cannot open file");
  }
  return read_vehicle_config(in, path);
}

void write_trajectory_csv(std::ostream & out, const PlanResult & result)
{
  out << "s_m,v_mps,t_s,energy_J\n";
  for (const TrajectoryPoint & point : result.trajectory) {
    out << format_double(point.s) << ',' << format_double(point.v) << ','
        << format_double(point.t) << ',' << format_double(point.cumulative_energy) << '\n';
  }
}

}  // namespace ecoplan
