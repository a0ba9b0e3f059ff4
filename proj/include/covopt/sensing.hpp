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

#ifndef COVOPT_SENSING_HPP_
#define COVOPT_SENSING_HPP_

#include <span>
#include <vector>

#include "covopt/field.hpp"
#include "covopt/geometry.hpp"

namespace covopt {

// Exponential-decay sensor with a hard sensing radius.
struct SensorModel {
  double lambda = 0.0;  // decay rate per unit length
  double delta = 1.0;   // sensing radius

  friend bool operator==(const SensorModel&, const SensorModel&) = default;
};

void validate(const SensorModel& model);

struct Agent {
  Point position;
  SensorModel model;
};

// Ordered agent list. Positions must be feasible and pairwise distinct.
using Deployment = std::vector<Agent>;

void validate(const Deployment& deployment, const MissionSpace& ms);

Deployment make_deployment(std::span<const Point> positions,
                           const SensorModel& model);

// exp(-lambda * d).
double detection_prob(const SensorModel& model, double d);

// detection_prob if x is visible from s within the sensing radius, else 0.
double effective_prob(const SensorModel& model, Point s, Point x,
                      const MissionSpace& ms);

// 1 - prod_i (1 - p_i(x)); zero for an empty deployment.
double joint_detection(const Deployment& deployment, Point x,
                       const MissionSpace& ms);

enum class ColumnScope {
  kFeasibleCells,  // every feasible cell
  kMassSupport,    // only cells with nonzero weight * density
};

// Effective probability from s to every grid cell center. Cells outside the
// requested scope are zero.
std::vector<double> probability_column(const SensorModel& model, Point s,
                                       const QuadratureGrid& grid,
                                       const MissionSpace& ms,
                                       ColumnScope scope = ColumnScope::kFeasibleCells);

double coverage_objective(const Deployment& deployment,
                          const QuadratureGrid& grid, const MissionSpace& ms);

// H(dep + added) - H(dep) in one pass over the product form. Throws
// kInvalidArgument when `added` duplicates a deployed position.
double marginal_gain(const Deployment& deployment, const Agent& added,
                     const QuadratureGrid& grid, const MissionSpace& ms);

// Effective probabilities of a fixed candidate set over every grid cell,
// computed once and shared by greedy, curvature and oracle code.
class VisibilityCache {
 public:
  VisibilityCache(const MissionSpace& ms, const QuadratureGrid& grid,
                  std::vector<Point> positions, const SensorModel& model);

  std::size_t size() const { return positions_.size(); }
  std::size_t cells() const { return cells_; }
  const QuadratureGrid& grid() const { return *grid_; }
  const SensorModel& model() const { return model_; }
  std::span<const Point> positions() const { return positions_; }

  std::span<const double> column(std::size_t candidate) const {
    return {probs_.data() + candidate * cells_, cells_};
  }

  // H({candidate}).
  double single_coverage(std::size_t candidate) const;
  // H(subset) by a fresh product over the subset's columns.
  double objective(std::span<const std::size_t> subset) const;
  // H(subset + {candidate}) - H(subset).
  double gain(std::span<const std::size_t> subset, std::size_t candidate) const;

 private:
  const QuadratureGrid* grid_;
  std::vector<Point> positions_;
  SensorModel model_;
  std::size_t cells_;
  std::vector<double> probs_;  // candidate-major
};

// Running per-cell product prod_{i in S} (1 - p_i) for a growing subset S.
class ResidualProduct {
 public:
  explicit ResidualProduct(const VisibilityCache& cache);

  // H(S + {candidate}) - H(S).
  double gain(std::size_t candidate) const;
  void add(std::size_t candidate);
  // H(S).
  double value() const;

  std::span<const std::size_t> members() const { return members_; }
  std::span<const double> product() const { return product_; }
  // Rebuilds the product from the member columns.
  void refresh();

 private:
  const VisibilityCache* cache_;
  std::vector<double> product_;
  std::vector<std::size_t> members_;
};

}  // namespace covopt

#endif  // COVOPT_SENSING_HPP_
