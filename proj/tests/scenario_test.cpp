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

#include "covopt/scenario.hpp"

#include <gtest/gtest.h>

#include <string>

#include "covopt/error.hpp"
#include "test_support.hpp"

namespace covopt {
namespace {

using testing::scenario_path;

const char* kBundled[] = {"empty_60x50.json", "wall_60x50.json", "maze_60x50.json",
                          "random_obstacles_60x50.json", "rooms_60x50.json"};

std::string minimal(const std::string& extra) {
  return R"({
  "boundary": [[0, 0], [20, 0], [20, 10], [0, 10]],
  "grid_cell_size": 1.0,
  "candidate_spacing": 5.0,
  "agents": 3,
  "sensor": {"decay_rate_per_length": 0.1, "sensing_range": 30})" +
         extra + "\n}\n";
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_scenario_text(text, "test.json");
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a parse error";
  return ErrorKind::kIo;
}

std::string message_of(const std::string& text) {
  try {
    parse_scenario_text(text, "test.json");
  } catch (const Error& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return "";
}

TEST(ParseScenarioTest, BundledEmptySpace) {
  const Scenario s = parse_scenario(scenario_path("empty_60x50.json"));
  EXPECT_EQ(s.boundary.size(), 4u);
  EXPECT_EQ(s.boundary[2], (Point{60, 50}));
  EXPECT_TRUE(s.obstacles.empty());
  EXPECT_EQ(s.agents, 10u);
  EXPECT_EQ(s.sensor.lambda, 0.02);
  EXPECT_EQ(s.sensor.delta, 80.0);
  EXPECT_EQ(std::get<UniformDensity>(s.density).value, 1.0);
  EXPECT_EQ(s.gga.stopping_threshold, 1e-3);
  const World w = build_world(s);
  EXPECT_EQ(w.grid->size(), 3000u);
}

TEST(ParseScenarioTest, AllBundledScenariosLoad) {
  for (const char* name : kBundled) {
    EXPECT_NO_THROW(build_world(parse_scenario(scenario_path(name)))) << name;
  }
}

TEST(ParseScenarioTest, Defaults) {
  const Scenario s = parse_scenario_text(minimal(""));
  EXPECT_EQ(s.gga, (GgaConfig{0.5, 500, 1e-3, 1e-3, true, UpdateSchedule::kSynchronous}));
  EXPECT_EQ(s.seed, 0u);
}

TEST(ParseScenarioTest, ObstacleOutsideBoundary) {
  const std::string text =
      minimal(R"(,
  "obstacles": [[[2, 2], [4, 2], [4, 4]], [[18, 8], [25, 8], [25, 9]]])");
  EXPECT_EQ(kind_of(text), ErrorKind::kValidation);
  EXPECT_NE(message_of(text).find("obstacle 1"), std::string::npos);
  EXPECT_NE(message_of(text).find("/obstacles"), std::string::npos);
}

TEST(ParseScenarioTest, ZeroCellSize) {
  std::string text = minimal("");
  text.replace(text.find("\"grid_cell_size\": 1.0"), 21, "\"grid_cell_size\": 0");
  EXPECT_EQ(kind_of(text), ErrorKind::kInvalidParameter);
  EXPECT_NE(message_of(text).find("/grid_cell_size (line 3)"), std::string::npos);
}

TEST(ParseScenarioTest, UnknownAndMissingFields) {
  const std::string unknown = minimal(R"(,
  "colour": "blue")");
  EXPECT_EQ(kind_of(unknown), ErrorKind::kValidation);
  EXPECT_NE(message_of(unknown).find("colour"), std::string::npos);

  const std::string nested = minimal(R"(,
  "gga": {"step": 1})");
  EXPECT_NE(message_of(nested).find("/gga/step"), std::string::npos);

  const std::string missing = R"({"boundary": [[0,0],[1,0],[1,1]]})";
  EXPECT_NE(message_of(missing).find("grid_cell_size"), std::string::npos);
}

TEST(ParseScenarioTest, MalformedJson) {
  const std::string text = "{\n  \"boundary\": [[0, 0],\n}";
  EXPECT_EQ(kind_of(text), ErrorKind::kValidation);
  EXPECT_NE(message_of(text).find("line 3"), std::string::npos);
}

TEST(ParseScenarioTest, BadValues) {
  std::string negative = minimal("");
  negative.replace(negative.find("0.1"), 3, "-0.1");
  EXPECT_EQ(kind_of(negative), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of(minimal(R"(,
  "density": {"kind": "uniform", "value": -2})")),
            ErrorKind::kValidation);
  EXPECT_EQ(kind_of(minimal(R"(,
  "gga": {"schedule": "random"})")),
            ErrorKind::kValidation);
  EXPECT_THROW(parse_scenario("/nonexistent/file.json"), Error);
}

TEST(SerializeScenarioTest, RoundTrip) {
  std::vector<Scenario> cases;
  for (const char* name : kBundled) cases.push_back(parse_scenario(scenario_path(name)));
  cases.push_back(parse_scenario_text(minimal(R"(,
  "density": {"kind": "raster", "origin": [2, 1], "cell_size": 2.5,
              "values": [[0.5, 1, 2], [0, 3.25, 1e-3]]},
  "gga": {"step_size": 0.25, "max_iterations": 7, "stopping_threshold": 0.125,
          "fd_epsilon": 1e-4, "backtracking": false, "schedule": "sequential"},
  "seed": 18446744073709551615)")));
  for (const Scenario& s : cases) {
    const std::string text = serialize_scenario(s);
    const Scenario again = parse_scenario_text(text);
    EXPECT_EQ(again, s) << s.name;
    EXPECT_EQ(serialize_scenario(again), text);
  }
}

}  // namespace
}  // namespace covopt
