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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "covopt/error.hpp"
#include "covopt/greedy.hpp"
#include "test_support.hpp"

namespace covopt {
namespace {

using testing::rect;
using testing::rect_space;

double secant(const Deployment& dep, std::size_t agent, Point dir, double t,
              const QuadratureGrid& grid, const MissionSpace& ms) {
  Deployment plus = dep;
  Deployment minus = dep;
  plus[agent].position = dep[agent].position + t * dir;
  minus[agent].position = dep[agent].position - t * dir;
  return (coverage_objective(plus, grid, ms) - coverage_objective(minus, grid, ms)) /
         (2.0 * t);
}

TEST(ObjectiveGradientTest, ZeroAtCenterOfSymmetricSquare) {
  const MissionSpace ms = rect_space(10, 10);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  const Deployment dep = {{{5, 5}, {0.2, 20}}};
  const double h = coverage_objective(dep, grid, ms);
  const Point g = objective_gradient(dep, 0, grid, ms, default_gga_config(grid));
  EXPECT_LE(norm(g), 1e-6 * h);
}

TEST(ObjectiveGradientTest, PointsTowardUncoveredMass) {
  const MissionSpace ms = rect_space(10, 10);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  const Deployment dep = {{{2.3, 5.2}, {0.2, 20}}};
  const GgaConfig cfg = default_gga_config(grid);
  const Point g = objective_gradient(dep, 0, grid, ms, cfg);
  EXPECT_GT(g.x, 0.0);
  EXPECT_NEAR(g.x, secant(dep, 0, {1, 0}, cfg.fd_epsilon, grid, ms), 1e-9);
  EXPECT_NEAR(g.y, secant(dep, 0, {0, 1}, cfg.fd_epsilon, grid, ms), 1e-9);
}

TEST(ObjectiveGradientTest, ZeroWhenNothingInReach) {
  const MissionSpace ms = rect_space(40, 10);
  RasterDensity far;
  far.origin = {30, 0};
  far.cell_size = 10;
  far.rows = {{1.0}};
  const QuadratureGrid grid = build_grid(ms, far, 1.0);
  const Deployment dep = {{{3, 5}, {0.1, 5}}};
  const Point g = objective_gradient(dep, 0, grid, ms, default_gga_config(grid));
  EXPECT_EQ(g.x, 0.0);
  EXPECT_EQ(g.y, 0.0);
  EXPECT_THROW(objective_gradient(dep, 1, grid, ms, default_gga_config(grid)), Error);
}

TEST(ObjectiveGradientTest, OneSidedOnBoundary) {
  const MissionSpace ms = rect_space(10, 10);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  const Deployment dep = {{{0, 4.3}, {0.2, 20}}};
  const Point g = objective_gradient(dep, 0, grid, ms, default_gga_config(grid));
  EXPECT_GT(g.x, 0.0);
}

TEST(ObjectiveGradientTest, HalvingEpsilonBarelyChangesSmoothGradients) {
  const MissionSpace ms = rect_space(20, 15);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> x(1.0, 19.0), y(1.0, 14.0);
  GgaConfig cfg = default_gga_config(grid);
  for (int trial = 0; trial < 10; ++trial) {
    const Deployment dep = {{{x(rng), y(rng)}, {0.15, 40}}, {{x(rng), y(rng)}, {0.15, 40}}};
    cfg.fd_epsilon = 1e-3;
    const Point coarse = objective_gradient(dep, 0, grid, ms, cfg);
    cfg.fd_epsilon = 5e-4;
    const Point fine = objective_gradient(dep, 0, grid, ms, cfg);
    EXPECT_LE(norm(coarse - fine), 1e-4 * (1.0 + norm(fine)));
  }
}

class GgaTest : public ::testing::Test {
 protected:
  MissionSpace ms_ = rect_space(30, 20, {rect(13, 0, 16, 12)});
  QuadratureGrid grid_ = build_grid(ms_, UniformDensity{1.0}, 1.0);
  SensorModel model_{0.15, 40};

  Deployment greedy_seed(std::size_t n) const {
    const CandidateSet candidates = build_candidates(ms_, 5.0);
    const VisibilityCache cache(ms_, grid_, candidates.positions, model_);
    const GreedyResult result = greedy_place_lazy(cache, n);
    Deployment dep;
    for (std::size_t k : result.chosen) dep.push_back({candidates.positions[k], model_});
    return dep;
  }
};

TEST_F(GgaTest, HugeThresholdReturnsInitial) {
  GgaConfig cfg = default_gga_config(grid_);
  cfg.stopping_threshold = 1e6;
  const Deployment seed = greedy_seed(3);
  const GgaTrace trace = gga(seed, grid_, ms_, cfg);
  EXPECT_EQ(trace.reason, Termination::kConverged);
  EXPECT_EQ(trace.sweeps(), 0u);
  for (std::size_t i = 0; i < seed.size(); ++i) {
    EXPECT_EQ(trace.final_deployment[i].position, seed[i].position);
  }
}

TEST_F(GgaTest, IterationLimits) {
  GgaConfig cfg = default_gga_config(grid_);
  cfg.max_iterations = 0;
  EXPECT_THROW(gga(greedy_seed(3), grid_, ms_, cfg), Error);
  cfg.max_iterations = 1;
  const GgaTrace trace = gga(greedy_seed(3), grid_, ms_, cfg);
  EXPECT_LE(trace.sweeps(), 1u);
  if (trace.reason == Termination::kMaxIterations) EXPECT_EQ(trace.sweeps(), 1u);
}

TEST_F(GgaTest, RejectsInfeasibleStart) {
  const Deployment bad = {{{14, 5}, model_}};
  try {
    gga(bad, grid_, ms_, default_gga_config(grid_));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}

TEST_F(GgaTest, ImprovesMonotonicallyAndStaysFeasible) {
  for (UpdateSchedule schedule : {UpdateSchedule::kSynchronous, UpdateSchedule::kSequential}) {
    GgaConfig cfg = default_gga_config(grid_);
    cfg.schedule = schedule;
    cfg.max_iterations = 60;
    const Deployment seed = greedy_seed(4);
    const double start = coverage_objective(seed, grid_, ms_);
    const GgaTrace trace = gga(seed, grid_, ms_, cfg);
    EXPECT_NEAR(trace.initial_objective(), start, 1e-9 * start);
    EXPECT_GE(trace.final_objective(), start - 1e-9);
    EXPECT_GT(trace.final_objective(), start);
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
      const GgaIterate& it = trace.iterates[k];
      if (k > 0) EXPECT_GE(it.objective, trace.iterates[k - 1].objective);
      for (std::size_t i = 0; i < it.positions.size(); ++i) {
        EXPECT_TRUE(is_feasible(it.positions[i], ms_));
        for (std::size_t j = 0; j < i; ++j) {
          EXPECT_GT(distance(it.positions[i], it.positions[j]), kCollisionDistance);
        }
      }
    }
    const double fresh = coverage_objective(trace.final_deployment, grid_, ms_);
    EXPECT_NEAR(trace.final_objective(), fresh, 1e-9 * fresh);
  }
}

TEST_F(GgaTest, TraceCsv) {
  GgaConfig cfg = default_gga_config(grid_);
  cfg.max_iterations = 2;
  const GgaTrace trace = gga(greedy_seed(2), grid_, ms_, cfg);
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "iter,agent,x,y,H,grad_norm");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, trace.iterates.size() * 2);
}

}  // namespace
}  // namespace covopt
