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

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "covopt/error.hpp"

namespace covopt {
namespace {

using nlohmann::json;

// Best-effort line of the first occurrence of "key" in the source text.
std::size_t line_of(std::string_view text, const std::string& key) {
  const std::string quoted = "\"" + key + "\"";
  const std::size_t pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  return static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n')) + 1;
}

class Reader {
 public:
  Reader(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(ErrorKind kind, const std::string& path,
                         const std::string& message) const {
    const std::string key = path.substr(path.find_last_of('/') + 1);
    const std::size_t line = line_of(text_, key);
    std::string where = source_ + ": " + path;
    if (line > 0) where += " (line " + std::to_string(line) + ")";
    throw Error(kind, where + ": " + message);
  }

  void only_fields(const json& obj, const std::string& path,
                   std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail(ErrorKind::kValidation, path, "expected an object");
    const std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
      if (!names.contains(key)) {
        fail(ErrorKind::kValidation, path + "/" + key, "unknown field '" + key + "'");
      }
    }
  }

  const json& required(const json& obj, const std::string& path,
                       const char* field) const {
    const auto it = obj.find(field);
    if (it == obj.end()) {
      fail(ErrorKind::kValidation, path + "/" + field,
           std::string("missing required field '") + field + "'");
    }
    return *it;
  }

  double number(const json& v, const std::string& path) const {
    if (!v.is_number()) fail(ErrorKind::kValidation, path, "expected a number");
    return v.get<double>();
  }

  double positive(const json& v, const std::string& path) const {
    const double x = number(v, path);
    if (!(x > 0.0)) {
      fail(ErrorKind::kInvalidParameter, path,
           "must be positive, got " + std::to_string(x));
    }
    return x;
  }

  std::uint64_t count(const json& v, const std::string& path) const {
    if (!v.is_number_unsigned()) {
      fail(ErrorKind::kValidation, path, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  Point point(const json& v, const std::string& path) const {
    if (!v.is_array() || v.size() != 2) {
      fail(ErrorKind::kValidation, path, "expected [x, y]");
    }
    return {number(v[0], path + "/0"), number(v[1], path + "/1")};
  }

  std::vector<Point> points(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(ErrorKind::kValidation, path, "expected a vertex list");
    std::vector<Point> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(point(v[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

 private:
  std::string_view text_;
  std::string source_;
};

EventDensity parse_density(const Reader& r, const json& v) {
  const std::string path = "/density";
  if (!v.is_object()) r.fail(ErrorKind::kValidation, path, "expected an object");
  const json& kind = r.required(v, path, "kind");
  if (kind == "uniform") {
    r.only_fields(v, path, {"kind", "value"});
    return UniformDensity{r.number(r.required(v, path, "value"), path + "/value")};
  }
  if (kind == "raster") {
    r.only_fields(v, path, {"kind", "origin", "cell_size", "values"});
    RasterDensity raster;
    raster.origin = r.point(r.required(v, path, "origin"), path + "/origin");
    raster.cell_size =
        r.positive(r.required(v, path, "cell_size"), path + "/cell_size");
    const json& rows = r.required(v, path, "values");
    if (!rows.is_array()) r.fail(ErrorKind::kValidation, path + "/values", "expected rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_path = path + "/values/" + std::to_string(i);
      if (!rows[i].is_array()) r.fail(ErrorKind::kValidation, row_path, "expected a row");
      std::vector<double> row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        row.push_back(r.number(rows[i][j], row_path + "/" + std::to_string(j)));
      }
      raster.rows.push_back(std::move(row));
    }
    return raster;
  }
  r.fail(ErrorKind::kValidation, path + "/kind",
         "unknown density kind (expected \"uniform\" or \"raster\")");
}

GgaConfig parse_gga(const Reader& r, const json& v, double cell_size) {
  const std::string path = "/gga";
  r.only_fields(v, path,
                {"step_size", "max_iterations", "stopping_threshold", "fd_epsilon",
                 "backtracking", "schedule"});
  GgaConfig cfg;
  cfg.stopping_threshold = 1e-3 * cell_size * cell_size;
  if (v.contains("step_size")) cfg.step_size = r.positive(v["step_size"], path + "/step_size");
  if (v.contains("max_iterations")) {
    cfg.max_iterations = r.count(v["max_iterations"], path + "/max_iterations");
    if (cfg.max_iterations < 1) {
      r.fail(ErrorKind::kInvalidParameter, path + "/max_iterations", "must be >= 1");
    }
  }
  if (v.contains("stopping_threshold")) {
    cfg.stopping_threshold =
        r.positive(v["stopping_threshold"], path + "/stopping_threshold");
  }
  if (v.contains("fd_epsilon")) {
    cfg.fd_epsilon = r.positive(v["fd_epsilon"], path + "/fd_epsilon");
  }
  if (v.contains("backtracking")) {
    if (!v["backtracking"].is_boolean()) {
      r.fail(ErrorKind::kValidation, path + "/backtracking", "expected true or false");
    }
    cfg.backtracking = v["backtracking"].get<bool>();
  }
  if (v.contains("schedule")) {
    const json& s = v["schedule"];
    if (s == "synchronous") {
      cfg.schedule = UpdateSchedule::kSynchronous;
    } else if (s == "sequential") {
      cfg.schedule = UpdateSchedule::kSequential;
    } else {
      r.fail(ErrorKind::kValidation, path + "/schedule",
             "expected \"synchronous\" or \"sequential\"");
    }
  }
  return cfg;
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json points_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(point_json(p));
  return out;
}

}  // namespace

Scenario parse_scenario_text(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kValidation, source + ": malformed JSON: " + e.what());
  }
  const Reader r(text, source);
  r.only_fields(doc, "",
                {"name", "boundary", "obstacles", "density", "grid_cell_size",
                 "candidate_spacing", "agents", "sensor", "gga", "seed"});

  Scenario s;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) r.fail(ErrorKind::kValidation, "/name", "expected a string");
    s.name = doc["name"].get<std::string>();
  }
  s.boundary = r.points(r.required(doc, "", "boundary"), "/boundary");
  if (doc.contains("obstacles")) {
    const json& obs = doc["obstacles"];
    if (!obs.is_array()) r.fail(ErrorKind::kValidation, "/obstacles", "expected a list");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      s.obstacles.push_back(r.points(obs[i], "/obstacles/" + std::to_string(i)));
    }
  }
  if (doc.contains("density")) s.density = parse_density(r, doc["density"]);
  s.grid_cell_size =
      r.positive(r.required(doc, "", "grid_cell_size"), "/grid_cell_size");
  s.candidate_spacing =
      r.positive(r.required(doc, "", "candidate_spacing"), "/candidate_spacing");
  s.agents = r.count(r.required(doc, "", "agents"), "/agents");
  if (s.agents < 1) r.fail(ErrorKind::kInvalidParameter, "/agents", "must be >= 1");

  const json& sensor = r.required(doc, "", "sensor");
  r.only_fields(sensor, "/sensor", {"decay_rate_per_length", "sensing_range"});
  s.sensor.lambda = r.number(r.required(sensor, "/sensor", "decay_rate_per_length"),
                             "/sensor/decay_rate_per_length");
  if (s.sensor.lambda < 0.0) {
    r.fail(ErrorKind::kInvalidParameter, "/sensor/decay_rate_per_length", "must be >= 0");
  }
  s.sensor.delta = r.positive(r.required(sensor, "/sensor", "sensing_range"),
                              "/sensor/sensing_range");

  s.gga = parse_gga(r, doc.contains("gga") ? doc["gga"] : json::object(),
                    s.grid_cell_size);
  if (doc.contains("seed")) s.seed = r.count(doc["seed"], "/seed");

  // Geometry and field invariants.
  try {
    validate_density(s.density);
    build_world(s);
  } catch (const Error& e) {
    std::string path = "/boundary";
    const std::string what = e.what();
    if (what.find("obstacle") != std::string::npos) path = "/obstacles";
    if (what.find("density") != std::string::npos) path = "/density";
    if (what.find("grid cell") != std::string::npos) path = "/grid_cell_size";
    if (what.find("lattice point") != std::string::npos) path = "/candidate_spacing";
    r.fail(e.kind(), path, what);
  }
  return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path.string());
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["name"] = s.name;
  doc["boundary"] = points_json(s.boundary);
  doc["obstacles"] = json::array();
  for (const auto& obstacle : s.obstacles) doc["obstacles"].push_back(points_json(obstacle));
  if (const auto* u = std::get_if<UniformDensity>(&s.density)) {
    doc["density"] = {{"kind", "uniform"}, {"value", u->value}};
  } else {
    const auto& raster = std::get<RasterDensity>(s.density);
    doc["density"] = {{"kind", "raster"},
                      {"origin", point_json(raster.origin)},
                      {"cell_size", raster.cell_size},
                      {"values", raster.rows}};
  }
  doc["grid_cell_size"] = s.grid_cell_size;
  doc["candidate_spacing"] = s.candidate_spacing;
  doc["agents"] = s.agents;
  doc["sensor"] = {{"decay_rate_per_length", s.sensor.lambda},
                   {"sensing_range", s.sensor.delta}};
  doc["gga"] = {{"step_size", s.gga.step_size},
                {"max_iterations", s.gga.max_iterations},
                {"stopping_threshold", s.gga.stopping_threshold},
                {"fd_epsilon", s.gga.fd_epsilon},
                {"backtracking", s.gga.backtracking},
                {"schedule", s.gga.schedule == UpdateSchedule::kSynchronous
                                 ? "synchronous"
                                 : "sequential"}};
  doc["seed"] = s.seed;
  return doc.dump(2) + "\n";
}

MissionSpace build_mission_space(const Scenario& scenario) {
  std::vector<Polygon> obstacles;
  obstacles.reserve(scenario.obstacles.size());
  for (std::size_t i = 0; i < scenario.obstacles.size(); ++i) {
    try {
      obstacles.emplace_back(scenario.obstacles[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "obstacle " + std::to_string(i) + ": " + e.what());
    }
  }
  return MissionSpace(Polygon(scenario.boundary), std::move(obstacles));
}

World build_world(const Scenario& scenario) {
  validate(scenario.sensor);
  MissionSpace space = build_mission_space(scenario);
  auto grid = std::make_unique<QuadratureGrid>(
      build_grid(space, scenario.density, scenario.grid_cell_size));
  CandidateSet candidates = build_candidates(space, scenario.candidate_spacing);
  return {std::move(space), std::move(grid), std::move(candidates)};
}

}  // namespace covopt
