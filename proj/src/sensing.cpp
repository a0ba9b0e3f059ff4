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

#include "covopt/sensing.hpp"

#include <cmath>
#include <string>

#include "covopt/error.hpp"

namespace covopt {

void validate(const SensorModel& model) {
  if (!(model.lambda >= 0.0) || !std::isfinite(model.lambda)) {
    throw Error(ErrorKind::kInvalidParameter,
                "sensing decay rate must be >= 0, got " + std::to_string(model.lambda));
  }
  if (!(model.delta > 0.0) || std::isnan(model.delta)) {
    throw Error(ErrorKind::kInvalidParameter,
                "sensing radius must be > 0, got " + std::to_string(model.delta));
  }
}

void validate(const Deployment& deployment, const MissionSpace& ms) {
  for (std::size_t i = 0; i < deployment.size(); ++i) {
    validate(deployment[i].model);
    if (!is_feasible(deployment[i].position, ms)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "agent " + std::to_string(i) + " is not at a feasible position");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (distance(deployment[i].position, deployment[j].position) <= kGeoEps) {
        throw Error(ErrorKind::kInvalidArgument,
                    "agents " + std::to_string(j) + " and " + std::to_string(i) +
                        " share a position");
      }
    }
  }
}

Deployment make_deployment(std::span<const Point> positions,
                           const SensorModel& model) {
  Deployment deployment;
  deployment.reserve(positions.size());
  for (const Point& p : positions) deployment.push_back({p, model});
  return deployment;
}

double detection_prob(const SensorModel& model, double d) {
  return std::exp(-model.lambda * d);
}

double effective_prob(const SensorModel& model, Point s, Point x,
                      const MissionSpace& ms) {
  if (!is_visible(s, x, ms, model.delta)) return 0.0;
  return detection_prob(model, distance(s, x));
}

double joint_detection(const Deployment& deployment, Point x,
                       const MissionSpace& ms) {
  double miss = 1.0;
  for (const Agent& agent : deployment) {
    miss *= 1.0 - effective_prob(agent.model, agent.position, x, ms);
  }
  return 1.0 - miss;
}

std::vector<double> probability_column(const SensorModel& model, Point s,
                                       const QuadratureGrid& grid,
                                       const MissionSpace& ms,
                                       ColumnScope scope) {
  std::vector<double> column(grid.size(), 0.0);
  const auto mass = grid.mass();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Cell& cell = grid[i];
    if (!cell.feasible) continue;
    if (scope == ColumnScope::kMassSupport && mass[i] == 0.0) continue;
    column[i] = effective_prob(model, s, cell.center, ms);
  }
  return column;
}

double coverage_objective(const Deployment& deployment,
                          const QuadratureGrid& grid, const MissionSpace& ms) {
  if (deployment.empty()) return 0.0;
  std::vector<double> miss(grid.size(), 1.0);
  for (const Agent& agent : deployment) {
    const auto column = probability_column(agent.model, agent.position, grid, ms,
                                           ColumnScope::kMassSupport);
    for (std::size_t i = 0; i < miss.size(); ++i) miss[i] *= 1.0 - column[i];
  }
  double total = 0.0;
  const auto mass = grid.mass();
  for (std::size_t i = 0; i < miss.size(); ++i) total += mass[i] * (1.0 - miss[i]);
  return total;
}

double marginal_gain(const Deployment& deployment, const Agent& added,
                     const QuadratureGrid& grid, const MissionSpace& ms) {
  for (std::size_t i = 0; i < deployment.size(); ++i) {
    if (distance(deployment[i].position, added.position) <= kGeoEps) {
      throw Error(ErrorKind::kInvalidArgument,
                  "added agent duplicates the position of agent " + std::to_string(i));
    }
  }
  std::vector<double> miss(grid.size(), 1.0);
  for (const Agent& agent : deployment) {
    const auto column = probability_column(agent.model, agent.position, grid, ms,
                                           ColumnScope::kMassSupport);
    for (std::size_t i = 0; i < miss.size(); ++i) miss[i] *= 1.0 - column[i];
  }
  const auto column = probability_column(added.model, added.position, grid, ms,
                                         ColumnScope::kMassSupport);
  double total = 0.0;
  const auto mass = grid.mass();
  for (std::size_t i = 0; i < miss.size(); ++i) total += mass[i] * column[i] * miss[i];
  return total;
}

VisibilityCache::VisibilityCache(const MissionSpace& ms, const QuadratureGrid& grid,
                                 std::vector<Point> positions,
                                 const SensorModel& model)
    : grid_(&grid),
      positions_(std::move(positions)),
      model_(model),
      cells_(grid.size()) {
  validate(model_);
  probs_.reserve(positions_.size() * cells_);
  for (const Point& p : positions_) {
    const auto column = probability_column(model_, p, grid, ms);
    probs_.insert(probs_.end(), column.begin(), column.end());
  }
}

double VisibilityCache::single_coverage(std::size_t candidate) const {
  return integrate(*grid_, column(candidate));
}

double VisibilityCache::objective(std::span<const std::size_t> subset) const {
  if (subset.empty()) return 0.0;
  std::vector<double> miss(cells_, 1.0);
  for (std::size_t k : subset) {
    const auto col = column(k);
    for (std::size_t i = 0; i < cells_; ++i) miss[i] *= 1.0 - col[i];
  }
  double total = 0.0;
  const auto mass = grid_->mass();
  for (std::size_t i = 0; i < cells_; ++i) total += mass[i] * (1.0 - miss[i]);
  return total;
}

double VisibilityCache::gain(std::span<const std::size_t> subset,
                             std::size_t candidate) const {
  std::vector<double> miss(cells_, 1.0);
  for (std::size_t k : subset) {
    const auto col = column(k);
    for (std::size_t i = 0; i < cells_; ++i) miss[i] *= 1.0 - col[i];
  }
  const auto col = column(candidate);
  double total = 0.0;
  const auto mass = grid_->mass();
  for (std::size_t i = 0; i < cells_; ++i) total += mass[i] * col[i] * miss[i];
  return total;
}

ResidualProduct::ResidualProduct(const VisibilityCache& cache)
    : cache_(&cache), product_(cache.cells(), 1.0) {}

double ResidualProduct::gain(std::size_t candidate) const {
  const auto col = cache_->column(candidate);
  const auto mass = cache_->grid().mass();
  double total = 0.0;
  for (std::size_t i = 0; i < product_.size(); ++i) {
    total += mass[i] * col[i] * product_[i];
  }
  return total;
}

void ResidualProduct::add(std::size_t candidate) {
  const auto col = cache_->column(candidate);
  for (std::size_t i = 0; i < product_.size(); ++i) product_[i] *= 1.0 - col[i];
  members_.push_back(candidate);
}

double ResidualProduct::value() const {
  const auto mass = cache_->grid().mass();
  double total = 0.0;
  for (std::size_t i = 0; i < product_.size(); ++i) {
    total += mass[i] * (1.0 - product_[i]);
  }
  return total;
}

void ResidualProduct::refresh() {
  std::fill(product_.begin(), product_.end(), 1.0);
  for (std::size_t k : members_) {
    const auto col = cache_->column(k);
    for (std::size_t i = 0; i < product_.size(); ++i) product_[i] *= 1.0 - col[i];
  }
}

}  // namespace covopt
