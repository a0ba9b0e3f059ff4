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

#include "covopt/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "covopt/error.hpp"

namespace covopt {
namespace {

// Below this, dividing a candidate's miss factor out of the full product is
// not trusted and the product is rebuilt without it.
constexpr double kMissFloor = 1e-12;

void check_count(std::size_t n_agents) {
  if (n_agents < 1) {
    throw Error(ErrorKind::kInvalidParameter, "agent count must be >= 1");
  }
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

// x^N evaluated through the logarithm so large N stays accurate.
double power(double x, std::size_t n) {
  if (x <= 0.0) return 0.0;
  return std::exp(static_cast<double>(n) * std::log(x));
}

}  // namespace

TotalCurvature total_curvature(const VisibilityCache& cache) {
  const std::size_t n = cache.size();
  if (n == 0) {
    throw Error(ErrorKind::kEmptyCandidateSet, "total curvature needs candidates");
  }
  const std::size_t cells = cache.cells();
  const auto mass = cache.grid().mass();

  std::vector<double> full(cells, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = cache.column(j);
    for (std::size_t i = 0; i < cells; ++i) full[i] *= 1.0 - col[i];
  }

  TotalCurvature result;
  result.c = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = cache.column(j);
    double alone = 0.0;
    double last = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      if (mass[i] == 0.0 || col[i] == 0.0) continue;
      alone += mass[i] * col[i];
      const double own_miss = 1.0 - col[i];
      double others;
      if (own_miss >= kMissFloor) {
        others = full[i] / own_miss;
      } else {
        others = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) others *= 1.0 - cache.column(k)[i];
        }
      }
      last += mass[i] * col[i] * others;
    }
    if (alone <= 0.0) {
      throw Error(ErrorKind::kDegenerateCandidate,
                  "candidate " + std::to_string(j) + " at (" +
                      std::to_string(cache.positions()[j].x) + ", " +
                      std::to_string(cache.positions()[j].y) +
                      ") covers no event mass");
    }
    const double cj = std::clamp(1.0 - last / alone, 0.0, 1.0);
    if (cj > result.c) {
      result.c = cj;
      result.argmax = j;
    }
  }
  return result;
}

ElementalCurvature elemental_curvature(const VisibilityCache& cache,
                                       AlphaDomain domain) {
  if (cache.size() == 0) {
    throw Error(ErrorKind::kEmptyCandidateSet, "elemental curvature needs candidates");
  }
  const auto& grid = cache.grid();
  ElementalCurvature result;
  double min_prob = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cache.size(); ++j) {
    const auto col = cache.column(j);
    for (std::size_t i = 0; i < cache.cells(); ++i) {
      if (domain == AlphaDomain::kFeasible && !grid[i].feasible) continue;
      if (col[i] < min_prob) {
        min_prob = col[i];
        result.candidate = j;
        result.cell = i;
      }
    }
  }
  // An empty domain leaves nothing to minimize over; treat it as alpha = 0.
  if (!std::isfinite(min_prob)) min_prob = 1.0;
  result.alpha = std::clamp(1.0 - min_prob, 0.0, 1.0);
  return result;
}

double bound_T(double c, std::size_t n_agents) {
  check_unit(c, "total curvature");
  check_count(n_agents);
  if (c == 0.0) return 1.0;
  const double n = static_cast<double>(n_agents);
  // 1 - ((N - c)/N)^N without cancellation for small c.
  return -std::expm1(n * std::log1p(-c / n)) / c;
}

double bound_E(double alpha, std::size_t n_agents) {
  check_unit(alpha, "elemental curvature");
  check_count(n_agents);
  const double n = static_cast<double>(n_agents);
  if (alpha == 1.0) return 1.0 - power((n - 1.0) / n, n_agents);
  // (alpha - alpha^N) / (1 - alpha^N) written in beta = 1 - alpha so the
  // ratio stays accurate as alpha approaches 1.
  const double beta = 1.0 - alpha;
  const double one_minus_alpha_n = -std::expm1(n * std::log1p(-beta));
  return 1.0 - power(1.0 - beta / one_minus_alpha_n, n_agents);
}

double bound_L(double t, double e) { return std::max(t, e); }

BoundReport compute_bounds(const VisibilityCache& cache, std::size_t n_agents,
                           AlphaDomain domain) {
  check_count(n_agents);
  const TotalCurvature total = total_curvature(cache);
  const ElementalCurvature elemental = elemental_curvature(cache, domain);
  BoundReport report;
  report.c = total.c;
  report.alpha = elemental.alpha;
  report.T = bound_T(total.c, n_agents);
  report.E = bound_E(elemental.alpha, n_agents);
  report.L = bound_L(report.T, report.E);
  report.n_agents = n_agents;
  report.c_argmax = total.argmax;
  report.alpha_candidate = elemental.candidate;
  report.alpha_cell = elemental.cell;
  return report;
}

std::vector<SweepRow> sweep_bounds(const MissionSpace& ms,
                                   const QuadratureGrid& grid,
                                   const CandidateSet& candidates,
                                   const SensorModel& base, std::size_t n_agents,
                                   SweepParameter parameter,
                                   std::span<const double> values,
                                   AlphaDomain domain) {
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::kInvalidParameter,
                  "sweep values must be positive, got " + std::to_string(v));
    }
    SensorModel model = base;
    (parameter == SweepParameter::kLambda ? model.lambda : model.delta) = v;
    const VisibilityCache cache(ms, grid, candidates.positions, model);
    rows.push_back({v, compute_bounds(cache, n_agents, domain)});
  }
  return rows;
}

}  // namespace covopt
