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

#ifndef COVOPT_GRADIENT_HPP_
#define COVOPT_GRADIENT_HPP_

#include <cstddef>
#include <ostream>
#include <vector>

#include "covopt/field.hpp"
#include "covopt/geometry.hpp"
#include "covopt/sensing.hpp"

namespace covopt {

enum class UpdateSchedule {
  kSynchronous,  // every agent steps against the same configuration
  kSequential,   // agents step in index order against updated positions
};

struct GgaConfig {
  // Distance moved by the agent with the largest gradient in one full step.
  double step_size = 0.5;
  std::size_t max_iterations = 500;
  // Stop once every per-agent gradient norm is at or below this.
  double stopping_threshold = 1e-3;
  double fd_epsilon = 1e-3;
  bool backtracking = true;
  UpdateSchedule schedule = UpdateSchedule::kSynchronous;

  friend bool operator==(const GgaConfig&, const GgaConfig&) = default;
};

void validate(const GgaConfig& config);

// Defaults with the stopping threshold scaled to the grid cell area.
GgaConfig default_gga_config(const QuadratureGrid& grid);

// Backtracking halves the step at most this many times.
inline constexpr int kMaxHalvings = 20;
// Agents closer than this after an update count as colliding.
inline constexpr double kCollisionDistance = 1e-6;

enum class Termination { kConverged, kMaxIterations, kNoImprovement };

const char* to_string(Termination reason);

struct GgaIterate {
  std::vector<Point> positions;
  double objective = 0.0;
  std::vector<double> grad_norms;  // per agent, at these positions
  double max_grad_norm = 0.0;
};

struct GgaTrace {
  std::vector<GgaIterate> iterates;  // iterates[0] is the initial deployment
  Termination reason = Termination::kMaxIterations;
  Deployment final_deployment;

  double initial_objective() const { return iterates.front().objective; }
  double final_objective() const { return iterates.back().objective; }
  std::size_t sweeps() const { return iterates.size() - 1; }
};

// Central finite-difference estimate of dH/ds_i. Perturbed positions that
// leave the feasible space are projected back; an axis where both
// perturbations are infeasible gets a zero component.
Point objective_gradient(const Deployment& deployment, std::size_t agent,
                         const QuadratureGrid& grid, const MissionSpace& ms,
                         const GgaConfig& config);

// Projected gradient ascent on H from the given deployment.
GgaTrace gga(const Deployment& initial, const QuadratureGrid& grid,
             const MissionSpace& ms, const GgaConfig& config);

// CSV with header iter,agent,x,y,H,grad_norm.
void write_trace_csv(std::ostream& out, const GgaTrace& trace);

}  // namespace covopt

#endif  // COVOPT_GRADIENT_HPP_
