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

#include "covopt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "covopt/curvature.hpp"
#include "covopt/gradient.hpp"
#include "covopt/greedy.hpp"
#include "covopt/oracle.hpp"
#include "covopt/scenario.hpp"
#include "covopt/sensing.hpp"

namespace covopt {
namespace {

namespace fs = std::filesystem;

// Contour levels reported by the heatmap command.
constexpr double kHighCoverage = 0.97;
constexpr double kMidCoverage = 0.50;

std::ofstream open_artifact(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream file(dir / name);
  if (!file) throw Error(ErrorKind::kIo, "cannot write " + (dir / name).string());
  file << std::setprecision(12);
  return file;
}

void write_positions(const fs::path& dir, const std::vector<Point>& positions) {
  auto file = open_artifact(dir, "positions.csv");
  file << "agent,x,y\n";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    file << i << ',' << positions[i].x << ',' << positions[i].y << '\n';
  }
}

std::vector<Point> read_positions(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open positions file " + path.string());
  std::vector<Point> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.rfind("agent", 0) == 0 || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double index = 0.0;
    Point p;
    if (!(fields >> index >> p.x >> p.y)) {
      throw Error(ErrorKind::kValidation, path.string() + ": line " +
                                              std::to_string(line_no) +
                                              ": expected agent,x,y");
    }
    out.push_back(p);
  }
  return out;
}

Scenario load(const CommandOptions& o) {
  Scenario s = parse_scenario(o.scenario);
  if (o.seed) s.seed = *o.seed;
  if (o.grid_h) {
    s.grid_cell_size = *o.grid_h;
    s.gga.stopping_threshold = 1e-3 * s.grid_cell_size * s.grid_cell_size;
  }
  if (o.candidate_spacing) s.candidate_spacing = *o.candidate_spacing;
  if (o.agents) {
    if (*o.agents < 1) throw Error(ErrorKind::kInvalidParameter, "--n must be >= 1");
    s.agents = *o.agents;
  }
  if (o.lambda) s.sensor.lambda = *o.lambda;
  if (o.delta) s.sensor.delta = *o.delta;
  return s;
}

std::vector<Point> pick_positions(const VisibilityCache& cache,
                                  const GreedyResult& result) {
  std::vector<Point> out;
  for (std::size_t k : result.chosen) out.push_back(cache.positions()[k]);
  return out;
}

void print_positions(std::ostream& out, const std::vector<Point>& positions) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out << "  agent " << i << ": (" << positions[i].x << ", " << positions[i].y
        << ")\n";
  }
}

void write_bounds_row(std::ostream& out, const BoundReport& r) {
  out << r.n_agents << ',' << r.c << ',' << r.alpha << ',' << r.T << ',' << r.E
      << ',' << r.L << '\n';
}

int cmd_evaluate(const Scenario& s, const World& w, const CommandOptions& o,
                 std::ostream& out) {
  double feasible_area = 0.0;
  for (const Cell& c : w.grid->cells()) {
    if (c.feasible) feasible_area += c.weight;
  }
  out << "scenario: " << s.name << '\n'
      << "grid cells: " << w.grid->size() << " (h = " << s.grid_cell_size << ")\n"
      << "feasible area: " << feasible_area << '\n'
      << "event mass: " << integrate(*w.grid, [](Point) { return 1.0; }) << '\n'
      << "candidates: " << w.candidates.size() << '\n';
  if (o.positions) {
    const auto positions = read_positions(*o.positions);
    const Deployment dep = make_deployment(positions, s.sensor);
    validate(dep, w.space);
    out << "H = " << coverage_objective(dep, *w.grid, w.space) << '\n';
  }
  return kExitOk;
}

int cmd_greedy(const Scenario& s, const World& w, const CommandOptions& o,
               std::ostream& out) {
  const VisibilityCache cache(w.space, *w.grid, w.candidates.positions, s.sensor);
  const GreedyResult result = greedy_place_lazy(cache, s.agents);
  const auto positions = pick_positions(cache, result);
  out << "greedy placed " << positions.size() << " of " << s.agents << " agents ("
      << result.evaluations << " gain evaluations)\n";
  if (result.stopped_early) out << "  stopped early: remaining gains are zero\n";
  if (result.constraint_slack) out << "  constraint slack: fewer candidates than agents\n";
  print_positions(out, positions);
  out << "H = " << result.value() << '\n';
  write_positions(o.out_dir, positions);
  auto trace = open_artifact(o.out_dir, "greedy_trace.csv");
  trace << "step,candidate,x,y,gain,H\n";
  for (std::size_t i = 0; i < result.chosen.size(); ++i) {
    trace << i << ',' << result.chosen[i] << ',' << positions[i].x << ','
          << positions[i].y << ',' << result.gains[i] << ','
          << result.objective_trace[i] << '\n';
  }
  return kExitOk;
}

GgaTrace run_gga(const Scenario& s, const World& w, double* greedy_value) {
  const VisibilityCache cache(w.space, *w.grid, w.candidates.positions, s.sensor);
  const GreedyResult seed = greedy_place_lazy(cache, s.agents);
  if (greedy_value) *greedy_value = seed.value();
  const auto positions = pick_positions(cache, seed);
  return gga(make_deployment(positions, s.sensor), *w.grid, w.space, s.gga);
}

int cmd_gga(const Scenario& s, const World& w, const CommandOptions& o,
            std::ostream& out) {
  double greedy_value = 0.0;
  const GgaTrace trace = run_gga(s, w, &greedy_value);
  const auto& final_positions = trace.iterates.back().positions;
  out << "greedy H = " << greedy_value << '\n'
      << "GGA H = " << trace.final_objective() << " after " << trace.sweeps()
      << " sweeps (" << to_string(trace.reason) << ")\n";
  print_positions(out, final_positions);
  write_positions(o.out_dir, final_positions);
  auto file = open_artifact(o.out_dir, "gga_trace.csv");
  write_trace_csv(file, trace);
  return kExitOk;
}

int cmd_bounds(const Scenario& s, const World& w, const CommandOptions& o,
               std::ostream& out) {
  const VisibilityCache cache(w.space, *w.grid, w.candidates.positions, s.sensor);
  const BoundReport r = compute_bounds(cache, s.agents, o.alpha_domain);
  out << "N = " << r.n_agents << '\n'
      << "c = " << r.c << " (candidate " << r.c_argmax << ")\n"
      << "alpha = " << r.alpha << " (candidate " << r.alpha_candidate << ", cell "
      << r.alpha_cell << ")\n"
      << "T(c,N) = " << r.T << '\n'
      << "E(alpha,N) = " << r.E << '\n'
      << "L(N) = " << r.L << '\n';
  auto file = open_artifact(o.out_dir, "bounds.csv");
  file << "N,c,alpha,T,E,L\n";
  write_bounds_row(file, r);
  return kExitOk;
}

int cmd_sweep(const Scenario& s, const World& w, const CommandOptions& o,
              std::ostream& out) {
  if (!o.sweep) {
    throw Error(ErrorKind::kInvalidParameter,
                "sweep needs --sweep <lambda|delta>:<start>:<stop>:<steps>");
  }
  const auto values = o.sweep->values();
  const auto rows = sweep_bounds(w.space, *w.grid, w.candidates, s.sensor, s.agents,
                                 o.sweep->parameter, values, o.alpha_domain);
  auto file = open_artifact(o.out_dir, "sweep.csv");
  file << "param,c,alpha,T,E,L\n";
  for (const SweepRow& row : rows) {
    file << row.value << ',' << row.report.c << ',' << row.report.alpha << ','
         << row.report.T << ',' << row.report.E << ',' << row.report.L << '\n';
  }
  out << "wrote " << rows.size() << " rows to " << (o.out_dir / "sweep.csv").string()
      << '\n';
  return kExitOk;
}

int cmd_oracle(const Scenario& s, const World& w, const CommandOptions& o,
               std::ostream& out) {
  const VisibilityCache cache(w.space, *w.grid, w.candidates.positions, s.sensor);
  const OracleResult best = brute_force(cache, s.agents);
  const GreedyResult greedy = greedy_place(cache, s.agents);
  const BoundReport bounds = compute_bounds(cache, s.agents, o.alpha_domain);
  const double ratio = best.best_value > 0.0 ? greedy.value() / best.best_value : 1.0;
  out << "subsets evaluated: " << best.subsets_evaluated << '\n'
      << "optimum H = " << best.best_value << '\n'
      << "greedy H = " << greedy.value() << '\n'
      << "ratio = " << ratio << " (L(N) = " << bounds.L << ")\n";
  auto file = open_artifact(o.out_dir, "oracle.csv");
  file << "subsets_evaluated,optimum,greedy,ratio,L\n"
       << best.subsets_evaluated << ',' << best.best_value << ',' << greedy.value()
       << ',' << ratio << ',' << bounds.L << '\n';
  file << "rank,candidate,x,y\n";
  for (std::size_t i = 0; i < best.best_subset.size(); ++i) {
    const Point p = cache.positions()[best.best_subset[i]];
    file << i << ',' << best.best_subset[i] << ',' << p.x << ',' << p.y << '\n';
  }
  return kExitOk;
}

int cmd_check(const Scenario& s, const World& w, const CommandOptions& o,
              std::ostream& out) {
  const VisibilityCache cache(w.space, *w.grid, w.candidates.positions, s.sensor);
  const PropertyReport sub = check_submodular(cache, o.trials, s.seed);
  const std::size_t ground = std::min<std::size_t>(cache.size(), 8);
  const EquivalenceReport eq =
      check_definition_equivalence(cache, ground, o.trials, s.seed);
  out << "submodularity: " << sub.violations << " violations in " << sub.trials
      << " trials (seed " << sub.seed << ")\n"
      << "monotonicity: " << sub.monotonicity_violations << " violations\n"
      << "lattice inequality: " << eq.lattice_violations << " violations over "
      << ground << " candidates\n"
      << "diminishing returns: " << eq.diminishing_violations << " violations\n";
  auto file = open_artifact(o.out_dir, "check.csv");
  write_report(file, sub);
  write_report(file, eq);
  const bool clean = sub.violations == 0 && sub.monotonicity_violations == 0 &&
                     eq.lattice_violations == 0 && eq.diminishing_violations == 0;
  return clean ? kExitOk : kExitOther;
}

int cmd_heatmap(const Scenario& s, const World& w, const CommandOptions& o,
                std::ostream& out) {
  std::vector<Point> positions;
  if (o.positions) {
    positions = read_positions(*o.positions);
  } else {
    positions = run_gga(s, w, nullptr).iterates.back().positions;
  }
  const Deployment dep = make_deployment(positions, s.sensor);
  validate(dep, w.space);
  const QuadratureGrid& grid = *w.grid;

  std::vector<double> miss(grid.size(), 1.0);
  for (const Agent& a : dep) {
    const auto col = probability_column(a.model, a.position, grid, w.space);
    for (std::size_t i = 0; i < grid.size(); ++i) miss[i] *= 1.0 - col[i];
  }

  double feasible_area = 0.0;
  double high_area = 0.0;
  double mid_area = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!grid[i].feasible) continue;
    const double p = 1.0 - miss[i];
    feasible_area += grid[i].weight;
    if (p >= kHighCoverage) high_area += grid[i].weight;
    if (p >= kMidCoverage) mid_area += grid[i].weight;
  }

  // Image orientation: first row is the largest y.
  auto csv = open_artifact(o.out_dir, "heatmap.csv");
  fs::create_directories(o.out_dir);
  std::ofstream pgm(o.out_dir / "heatmap.pgm");
  pgm << "P2\n" << grid.columns() << ' ' << grid.rows() << "\n255\n";
  for (std::size_t r = grid.rows(); r-- > 0;) {
    for (std::size_t c = 0; c < grid.columns(); ++c) {
      const std::size_t i = r * grid.columns() + c;
      const double p = grid[i].feasible ? 1.0 - miss[i] : 0.0;
      csv << (c ? "," : "") << p;
      pgm << (c ? " " : "") << static_cast<int>(std::lround(255.0 * p));
    }
    csv << '\n';
    pgm << '\n';
  }

  auto stats = open_artifact(o.out_dir, "heatmap_stats.csv");
  stats << "threshold,area,fraction\n"
        << kHighCoverage << ',' << high_area << ',' << high_area / feasible_area << '\n'
        << kMidCoverage << ',' << mid_area << ',' << mid_area / feasible_area << '\n';
  out << "H = " << coverage_objective(dep, grid, w.space) << '\n'
      << "area with P >= " << kHighCoverage << ": " << high_area << " ("
      << 100.0 * high_area / feasible_area << "% of feasible)\n"
      << "area with P >= " << kMidCoverage << ": " << mid_area << " ("
      << 100.0 * mid_area / feasible_area << "% of feasible)\n";
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kValidation:
    case ErrorKind::kEmptyCandidateSet:
      return kExitValidation;
    case ErrorKind::kInstanceTooLarge:
      return kExitTooLarge;
    case ErrorKind::kDegenerateCandidate:
    case ErrorKind::kIo:
      return kExitOther;
  }
  return kExitOther;
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  if (steps == 1) return {start};
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(start + (stop - start) * static_cast<double>(i) /
                              static_cast<double>(steps - 1));
  }
  return out;
}

SweepSpec parse_sweep_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::kInvalidParameter, "bad --sweep '" + text + "': " + why);
  };
  if (parts.size() != 4) throw bad("expected <param>:<start>:<stop>:<steps>");
  SweepSpec spec;
  if (parts[0] == "lambda") {
    spec.parameter = SweepParameter::kLambda;
  } else if (parts[0] == "delta") {
    spec.parameter = SweepParameter::kDelta;
  } else {
    throw bad("parameter must be lambda or delta");
  }
  try {
    std::size_t used = 0;
    spec.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw bad("start is not a number");
    spec.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw bad("stop is not a number");
    const long steps = std::stol(parts[3], &used);
    if (used != parts[3].size() || steps < 1) throw bad("steps must be >= 1");
    spec.steps = static_cast<std::size_t>(steps);
  } catch (const std::logic_error&) {
    throw bad("expected numeric start, stop and steps");
  }
  if (!(spec.start > 0.0) || !(spec.stop > 0.0)) throw bad("values must be positive");
  return spec;
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto& names = known_commands();
    if (std::find(names.begin(), names.end(), options.command) == names.end()) {
      throw Error(ErrorKind::kValidation, "unknown command '" + options.command + "'");
    }
    const Scenario scenario = load(options);
    const World world = build_world(scenario);
    out << std::setprecision(10);
    if (options.command == "evaluate") return cmd_evaluate(scenario, world, options, out);
    if (options.command == "greedy") return cmd_greedy(scenario, world, options, out);
    if (options.command == "gga") return cmd_gga(scenario, world, options, out);
    if (options.command == "bounds") return cmd_bounds(scenario, world, options, out);
    if (options.command == "sweep") return cmd_sweep(scenario, world, options, out);
    if (options.command == "oracle") return cmd_oracle(scenario, world, options, out);
    if (options.command == "check") return cmd_check(scenario, world, options, out);
    return cmd_heatmap(scenario, world, options, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
}

}  // namespace covopt
