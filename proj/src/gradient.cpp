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

#include "covopt/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <string>

#include "covopt/error.hpp"

namespace covopt {
namespace {

// Per-agent probability columns for one configuration, restricted to the
// cells that carry event mass.
class Evaluator {
 public:
  Evaluator(const QuadratureGrid& grid, const MissionSpace& ms)
      : grid_(grid), ms_(ms) {}

  std::vector<double> column(const SensorModel& model, Point p) const {
    return probability_column(model, p, grid_, ms_, ColumnScope::kMassSupport);
  }

  std::vector<std::vector<double>> columns(const Deployment& dep) const {
    std::vector<std::vector<double>> out;
    out.reserve(dep.size());
    for (const Agent& a : dep) out.push_back(column(a.model, a.position));
    return out;
  }

  // prod over agents k != skip of (1 - p_k).
  std::vector<double> miss_without(const std::vector<std::vector<double>>& cols,
                                   std::size_t skip) const {
    std::vector<double> miss(grid_.size(), 1.0);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k == skip) continue;
      for (std::size_t i = 0; i < miss.size(); ++i) miss[i] *= 1.0 - cols[k][i];
    }
    return miss;
  }

  double objective(const std::vector<std::vector<double>>& cols) const {
    return objective_with(miss_without(cols, cols.size()), nullptr);
  }

  // H with one extra agent column folded into an existing miss product.
  double objective_with(const std::vector<double>& miss,
                        const std::vector<double>* extra) const {
    const auto mass = grid_.mass();
    double total = 0.0;
    for (std::size_t i = 0; i < miss.size(); ++i) {
      const double m = extra ? miss[i] * (1.0 - (*extra)[i]) : miss[i];
      total += mass[i] * (1.0 - m);
    }
    return total;
  }

  // Finite-difference gradient of agent `index` given the others' product.
  Point gradient(const Agent& agent, const std::vector<double>& others,
                 double eps) const {
    const Point s = agent.position;
    double comp[2] = {0.0, 0.0};
    for (int axis = 0; axis < 2; ++axis) {
      const Point e = axis == 0 ? Point{eps, 0.0} : Point{0.0, eps};
      Point plus = s + e;
      Point minus = s - e;
      const bool plus_ok = is_feasible(plus, ms_);
      const bool minus_ok = is_feasible(minus, ms_);
      if (!plus_ok && !minus_ok) continue;
      if (!plus_ok) plus = project_feasible(plus, ms_);
      if (!minus_ok) minus = project_feasible(minus, ms_);
      const double span = axis == 0 ? plus.x - minus.x : plus.y - minus.y;
      if (span <= 1e-3 * eps) continue;
      const auto col_plus = column(agent.model, plus);
      const auto col_minus = column(agent.model, minus);
      comp[axis] =
          (objective_with(others, &col_plus) - objective_with(others, &col_minus)) /
          span;
    }
    return {comp[0], comp[1]};
  }

 private:
  const QuadratureGrid& grid_;
  const MissionSpace& ms_;
};

// Reverts moved agents until no two agents are within kCollisionDistance.
// The later-indexed agent of a colliding pair is reverted first.
void resolve_collisions(std::vector<Point>& trial, const std::vector<Point>& current) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < trial.size() && !changed; ++i) {
      for (std::size_t j = 0; j < i && !changed; ++j) {
        if (distance(trial[i], trial[j]) > kCollisionDistance) continue;
        const std::size_t revert = trial[i] != current[i] ? i : j;
        trial[revert] = current[revert];
        changed = true;
      }
    }
  }
}

std::vector<Point> positions_of(const Deployment& dep) {
  std::vector<Point> out;
  out.reserve(dep.size());
  for (const Agent& a : dep) out.push_back(a.position);
  return out;
}

double max_of(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, x);
  return best;
}

}  // namespace

void validate(const GgaConfig& config) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidParameter,
                  std::string(name) + " must be positive, got " + std::to_string(v));
    }
  };
  positive(config.step_size, "step size");
  positive(config.stopping_threshold, "stopping threshold");
  positive(config.fd_epsilon, "finite-difference epsilon");
  if (config.max_iterations < 1) {
    throw Error(ErrorKind::kInvalidParameter, "max iterations must be >= 1");
  }
}

GgaConfig default_gga_config(const QuadratureGrid& grid) {
  GgaConfig config;
  config.stopping_threshold = 1e-3 * grid.cell_size() * grid.cell_size();
  return config;
}

const char* to_string(Termination reason) {
  switch (reason) {
    case Termination::kConverged:
      return "converged";
    case Termination::kMaxIterations:
      return "max_iterations";
    case Termination::kNoImprovement:
      return "no_improvement";
  }
  return "unknown";
}

Point objective_gradient(const Deployment& deployment, std::size_t agent,
                         const QuadratureGrid& grid, const MissionSpace& ms,
                         const GgaConfig& config) {
  if (agent >= deployment.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "agent index " + std::to_string(agent) + " out of range");
  }
  const Evaluator eval(grid, ms);
  const auto cols = eval.columns(deployment);
  return eval.gradient(deployment[agent], eval.miss_without(cols, agent),
                       config.fd_epsilon);
}

GgaTrace gga(const Deployment& initial, const QuadratureGrid& grid,
             const MissionSpace& ms, const GgaConfig& config) {
  validate(config);
  validate(initial, ms);
  const Evaluator eval(grid, ms);
  const std::size_t n = initial.size();

  Deployment current = initial;
  auto cols = eval.columns(current);
  double value = eval.objective(cols);

  GgaTrace trace;
  for (std::size_t iter = 0;; ++iter) {
    std::vector<Point> grads(n);
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
      grads[i] = eval.gradient(current[i], eval.miss_without(cols, i), config.fd_epsilon);
      norms[i] = norm(grads[i]);
    }
    const double max_norm = max_of(norms);
    trace.iterates.push_back({positions_of(current), value, norms, max_norm});

    if (max_norm <= config.stopping_threshold) {
      trace.reason = Termination::kConverged;
      break;
    }
    if (iter == config.max_iterations) {
      trace.reason = Termination::kMaxIterations;
      break;
    }

    bool improved = false;
    if (config.schedule == UpdateSchedule::kSynchronous) {
      const std::vector<Point> now = positions_of(current);
      double scale = config.step_size / max_norm;
      for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, scale *= 0.5) {
        std::vector<Point> trial(n);
        for (std::size_t i = 0; i < n; ++i) {
          trial[i] = project_feasible(now[i] + scale * grads[i], ms);
        }
        resolve_collisions(trial, now);
        Deployment next = current;
        std::vector<std::vector<double>> next_cols = cols;
        for (std::size_t i = 0; i < n; ++i) {
          if (trial[i] == now[i]) continue;
          next[i].position = trial[i];
          next_cols[i] = eval.column(next[i].model, trial[i]);
        }
        const double next_value = eval.objective(next_cols);
        if (!config.backtracking || next_value > value) {
          current = std::move(next);
          cols = std::move(next_cols);
          value = next_value;
          improved = true;
          break;
        }
        if (!config.backtracking) break;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const auto others = eval.miss_without(cols, i);
        const Point g = eval.gradient(current[i], others, config.fd_epsilon);
        const double g_norm = norm(g);
        if (g_norm <= config.stopping_threshold) continue;
        double scale = config.step_size / g_norm;
        for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, scale *= 0.5) {
          const Point candidate =
              project_feasible(current[i].position + scale * g, ms);
          bool collides = false;
          for (std::size_t j = 0; j < n && !collides; ++j) {
            collides = j != i && distance(candidate, current[j].position) <=
                                     kCollisionDistance;
          }
          if (collides || candidate == current[i].position) break;
          auto col = eval.column(current[i].model, candidate);
          const double next_value = eval.objective_with(others, &col);
          if (!config.backtracking || next_value > value) {
            current[i].position = candidate;
            cols[i] = std::move(col);
            value = next_value;
            improved = true;
            break;
          }
          if (!config.backtracking) break;
        }
      }
    }
    if (!improved) {
      trace.reason = Termination::kNoImprovement;
      break;
    }
  }
  trace.final_deployment = current;
  return trace;
}

void write_trace_csv(std::ostream& out, const GgaTrace& trace) {
  out << "iter,agent,x,y,H,grad_norm\n";
  out << std::setprecision(12);
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    const GgaIterate& it = trace.iterates[k];
    for (std::size_t i = 0; i < it.positions.size(); ++i) {
      out << k << ',' << i << ',' << it.positions[i].x << ',' << it.positions[i].y
          << ',' << it.objective << ',' << it.grad_norms[i] << '\n';
    }
  }
}

}  // namespace covopt
