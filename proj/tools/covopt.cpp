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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "covopt/commands.hpp"

int main(int argc, char** argv) {
  covopt::CommandOptions opts;
  CLI::App app{"Sensor coverage placement: greedy with curvature bounds and GGA refinement"};

  std::string scenario_flag;
  std::string positional_scenario;
  std::string sweep;
  std::string alpha_domain = "feasible";
  std::string positions;

  app.add_option("command", opts.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(covopt::known_commands()));
  app.add_option("scenario_file", positional_scenario, "Scenario JSON file");
  app.add_option("--scenario", scenario_flag, "Scenario JSON file");
  app.add_option("--out", opts.out_dir, "Output directory for artifacts")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Random seed (overrides the scenario)");
  app.add_option("--grid-h", opts.grid_h, "Quadrature cell size");
  app.add_option("--candidates-spacing", opts.candidate_spacing,
                 "Candidate lattice spacing");
  app.add_option("--n", opts.agents, "Number of agents");
  app.add_option("--lambda", opts.lambda, "Sensing decay rate");
  app.add_option("--delta", opts.delta, "Sensing range");
  app.add_option("--alpha-domain", alpha_domain, "Elemental curvature domain")
      ->check(CLI::IsMember({"feasible", "omega"}))
      ->capture_default_str();
  app.add_option("--sweep", sweep, "<lambda|delta>:<start>:<stop>:<steps>");
  app.add_option("--positions", positions,
                 "agent,x,y CSV used by evaluate and heatmap");
  app.add_option("--trials", opts.trials, "Random trials for check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : covopt::kExitValidation;
  }

  if (!scenario_flag.empty() && !positional_scenario.empty()) {
    std::cerr << "error: give the scenario either positionally or with --scenario\n";
    return covopt::kExitValidation;
  }
  opts.scenario = scenario_flag.empty() ? positional_scenario : scenario_flag;
  if (opts.scenario.empty()) {
    std::cerr << "error: a scenario file is required\n";
    return covopt::kExitValidation;
  }
  opts.alpha_domain = alpha_domain == "omega" ? covopt::AlphaDomain::kOmega
                                              : covopt::AlphaDomain::kFeasible;
  if (!positions.empty()) opts.positions = positions;
  if (!sweep.empty()) {
    try {
      opts.sweep = covopt::parse_sweep_spec(sweep);
    } catch (const covopt::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return covopt::exit_code_for(e.kind());
    }
  }
  return covopt::run_command(opts, std::cout, std::cerr);
}
