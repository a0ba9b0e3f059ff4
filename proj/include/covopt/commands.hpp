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

#ifndef COVOPT_COMMANDS_HPP_
#define COVOPT_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "covopt/curvature.hpp"
#include "covopt/error.hpp"

namespace covopt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitTooLarge = 3;

int exit_code_for(ErrorKind kind);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kLambda;
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 1;

  std::vector<double> values() const;
};

// Parses "<lambda|delta>:<start>:<stop>:<steps>".
SweepSpec parse_sweep_spec(const std::string& text);

struct CommandOptions {
  std::string command;
  std::filesystem::path scenario;
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<double> grid_h;
  std::optional<double> candidate_spacing;
  std::optional<std::size_t> agents;
  std::optional<double> lambda;
  std::optional<double> delta;
  AlphaDomain alpha_domain = AlphaDomain::kFeasible;
  std::optional<SweepSpec> sweep;
  std::optional<std::filesystem::path> positions;  // agent,x,y CSV
  std::size_t trials = 1000;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = {
      "evaluate", "greedy", "gga", "bounds", "sweep", "oracle", "check", "heatmap"};
  return names;
}

// Runs one command. Human-readable output goes to `out`, diagnostics to
// `err`; artifacts are written under options.out_dir. Returns the exit code.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace covopt

#endif  // COVOPT_COMMANDS_HPP_
