// Copyright 2026 The Authors.
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

#ifndef COVOPT_SCENARIO_HPP_
#define COVOPT_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "covopt/field.hpp"
#include "covopt/geometry.hpp"
#include "covopt/gradient.hpp"
#include "covopt/sensing.hpp"

namespace covopt {

// Everything a batch run needs, as read from a scenario JSON file.
struct Scenario {
  std::string name;
  std::vector<Point> boundary;
  std::vector<std::vector<Point>> obstacles;
  EventDensity density = UniformDensity{1.0};
  double grid_cell_size = 1.0;
  double candidate_spacing = 10.0;
  std::size_t agents = 10;
  SensorModel sensor{0.02, 80.0};
  GgaConfig gga;
  std::uint64_t seed = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Mission space, grid and candidate lattice derived from a scenario. The grid
// is heap-allocated so caches holding a pointer to it survive moves.
struct World {
  MissionSpace space;
  std::unique_ptr<QuadratureGrid> grid;
  CandidateSet candidates;
};

// Parses and validates. Unknown fields, missing required fields and invariant
// violations throw Error naming the JSON path and, when known, the line.
Scenario parse_scenario_text(std::string_view text,
                             const std::string& source = "<scenario>");
Scenario parse_scenario(const std::filesystem::path& path);

std::string serialize_scenario(const Scenario& scenario);

MissionSpace build_mission_space(const Scenario& scenario);
World build_world(const Scenario& scenario);

}  // namespace covopt

#endif  // COVOPT_SCENARIO_HPP_
