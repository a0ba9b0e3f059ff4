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

#ifndef COVOPT_CURVATURE_HPP_
#define COVOPT_CURVATURE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "covopt/field.hpp"
#include "covopt/sensing.hpp"

namespace covopt {

struct TotalCurvature {
  double c = 0.0;
  std::size_t argmax = 0;  // candidate attaining the maximum
};

// c = max_j [1 - (H(Y) - H(Y \ j)) / H({j})] over the whole candidate set Y.
// Throws kDegenerateCandidate if some candidate covers nothing.
TotalCurvature total_curvature(const VisibilityCache& cache);

// Cells over which the elemental curvature minimizes p.
enum class AlphaDomain {
  kFeasible,  // feasible cells only (obstacle interiors excluded)
  kOmega,     // every cell of the boundary's grid
};

struct ElementalCurvature {
  double alpha = 0.0;
  std::size_t candidate = 0;  // argmin pair
  std::size_t cell = 0;
};

// alpha = 1 - min over candidates j and domain cells x of p_j(x).
ElementalCurvature elemental_curvature(const VisibilityCache& cache,
                                       AlphaDomain domain = AlphaDomain::kFeasible);

// (1/c) [1 - ((N - c)/N)^N], with T(0, N) = 1.
double bound_T(double c, std::size_t n_agents);
// 1 - ((alpha + ... + alpha^(N-1)) / (1 + alpha + ... + alpha^(N-1)))^N.
double bound_E(double alpha, std::size_t n_agents);
double bound_L(double t, double e);

struct BoundReport {
  double c = 0.0;
  double alpha = 0.0;
  double T = 0.0;
  double E = 0.0;
  double L = 0.0;
  std::size_t n_agents = 0;
  std::size_t c_argmax = 0;
  std::size_t alpha_candidate = 0;
  std::size_t alpha_cell = 0;
};

BoundReport compute_bounds(const VisibilityCache& cache, std::size_t n_agents,
                           AlphaDomain domain = AlphaDomain::kFeasible);

enum class SweepParameter { kLambda, kDelta };

struct SweepRow {
  double value = 0.0;
  BoundReport report;
};

// One bound report per parameter value with everything else held fixed.
std::vector<SweepRow> sweep_bounds(const MissionSpace& ms,
                                   const QuadratureGrid& grid,
                                   const CandidateSet& candidates,
                                   const SensorModel& base, std::size_t n_agents,
                                   SweepParameter parameter,
                                   std::span<const double> values,
                                   AlphaDomain domain = AlphaDomain::kFeasible);

}  // namespace covopt

#endif  // COVOPT_CURVATURE_HPP_
