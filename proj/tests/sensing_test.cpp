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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "covopt/error.hpp"
#include "test_support.hpp"

namespace covopt {
namespace {

using testing::rect;
using testing::rect_space;

TEST(DetectionProbTest, ExponentialDecay) {
  EXPECT_DOUBLE_EQ(detection_prob({0.02, 80}, 0.0), 1.0);
  EXPECT_NEAR(detection_prob({0.02, 80}, 50.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(detection_prob({0.02, 80}, 50.0), 0.367879, 1e-6);
  EXPECT_DOUBLE_EQ(detection_prob({0.0, 80}, 123.0), 1.0);
}

TEST(EffectiveProbTest, VisibilityAndRange) {
  const MissionSpace ms = rect_space(100, 100, {rect(40, 40, 60, 60)});
  const SensorModel model{0.02, 80};
  EXPECT_EQ(effective_prob(model, {30, 50}, {70, 50}, ms), 0.0);
  EXPECT_EQ(effective_prob(model, {0, 0}, {90, 0}, ms), 0.0);
  EXPECT_NEAR(effective_prob(model, {0, 10}, {50, 10}, ms), std::exp(-1.0), 1e-15);
}

TEST(JointDetectionTest, ProductForm) {
  const MissionSpace ms = rect_space(10, 10);
  EXPECT_EQ(joint_detection({}, {1, 1}, ms), 0.0);
  const SensorModel model{std::log(2.0), 80};  // p = 0.5 at distance 1
  const Deployment one = {{{2, 1}, model}};
  EXPECT_NEAR(joint_detection(one, {1, 1}, ms), 0.5, 1e-15);
  const Deployment two = {{{2, 1}, model}, {{1, 2}, model}};
  EXPECT_NEAR(joint_detection(two, {1, 1}, ms), 0.75, 1e-15);
}

TEST(CoverageObjectiveTest, EmptyDeploymentIsZero) {
  const MissionSpace ms = rect_space(60, 50);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  EXPECT_EQ(coverage_objective({}, grid, ms), 0.0);
}

TEST(CoverageObjectiveTest, SpreadAgentsNearlySaturate) {
  const MissionSpace ms = rect_space(60, 50);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  std::vector<Point> positions;
  for (double y : {12.5, 37.5}) {
    for (double x : {6.0, 18.0, 30.0, 42.0, 54.0}) positions.push_back({x, y});
  }
  const double h = coverage_objective(make_deployment(positions, {0.02, 80}), grid, ms);
  EXPECT_GE(h, 0.995 * 3000.0);
  EXPECT_LE(h, 3000.0);
}

TEST(CoverageObjectiveTest, MatchesFineGridQuadrature) {
  const MissionSpace ms = rect_space(60, 50);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  const Point s{30, 25};
  const double coarse = coverage_objective({{s, {0.4, 80}}}, grid, ms);
  // Independent midpoint rule at h = 0.25.
  double fine = 0.0;
  const double h = 0.25;
  for (int i = 0; i < 240; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double x = (i + 0.5) * h;
      const double y = (j + 0.5) * h;
      fine += h * h * std::exp(-0.4 * std::hypot(x - s.x, y - s.y));
    }
  }
  EXPECT_NEAR(coarse, fine, 0.01 * fine);
}

TEST(MarginalGainTest, Cases) {
  const MissionSpace ms = rect_space(30, 20, {rect(10, 0, 12, 20)});
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  const SensorModel model{0.1, 40};
  const Agent a{{5, 5}, model};
  EXPECT_NEAR(marginal_gain({}, a, grid, ms), coverage_objective({a}, grid, ms), 1e-12);
  EXPECT_THROW(marginal_gain({a}, a, grid, ms), Error);

  // Density only on the far side of the full-height wall.
  RasterDensity patch;
  patch.origin = {20, 0};
  patch.cell_size = 10;
  patch.rows = {{1.0}, {1.0}};
  const QuadratureGrid far = build_grid(ms, patch, 1.0);
  EXPECT_EQ(marginal_gain({}, a, far, ms), 0.0);
}

TEST(MarginalGainTest, OnePassMatchesDifference) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testing::random_instance(rng, 6, trial % 2 == 0);
    Deployment dep = make_deployment(
        std::span(inst.candidates).first(5), inst.model);
    const Agent added{inst.candidates[5], inst.model};
    const double one_pass = marginal_gain(dep, added, *inst.grid, inst.space);
    const double before = coverage_objective(dep, *inst.grid, inst.space);
    dep.push_back(added);
    const double after = coverage_objective(dep, *inst.grid, inst.space);
    EXPECT_NEAR(one_pass, after - before, 1e-12 * std::max(1.0, after));
  }
}

TEST(CoverageObjectiveTest, PropertiesOnRandomInstances) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testing::random_instance(rng, 6, trial % 2 == 1);
    const QuadratureGrid& grid = *inst.grid;
    const double total = integrate(grid, [](Point) { return 1.0; });
    Deployment dep = make_deployment(inst.candidates, inst.model);
    const double h = coverage_objective(dep, grid, inst.space);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, total + 1e-9);
    // Permutation invariance.
    std::shuffle(dep.begin(), dep.end(), rng);
    EXPECT_NEAR(coverage_objective(dep, grid, inst.space), h, 1e-10 * h);
    // Monotone under adding agents.
    double previous = 0.0;
    Deployment growing;
    for (const Agent& a : dep) {
      growing.push_back(a);
      const double current = coverage_objective(growing, grid, inst.space);
      EXPECT_GE(current, previous - 1e-12 * current);
      previous = current;
    }
    for (const Cell& c : grid.cells()) {
      const double p = joint_detection(dep, c.center, inst.space);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
  }
}

TEST(VisibilityCacheTest, MatchesDirectEvaluation) {
  std::mt19937_64 rng(21);
  auto inst = testing::random_instance(rng, 5, true);
  const VisibilityCache cache(inst.space, *inst.grid, inst.candidates, inst.model);
  ASSERT_EQ(cache.size(), 5u);
  for (std::size_t j = 0; j < cache.size(); ++j) {
    const auto col = cache.column(j);
    for (std::size_t i = 0; i < cache.cells(); ++i) {
      const Cell& c = (*inst.grid)[i];
      const double expected =
          c.feasible ? effective_prob(inst.model, inst.candidates[j], c.center, inst.space)
                     : 0.0;
      EXPECT_EQ(col[i], expected);
      EXPECT_GE(col[i], 0.0);
      EXPECT_LE(col[i], 1.0);
    }
  }
  const std::vector<std::size_t> all = {0, 1, 2, 3, 4};
  const double direct = coverage_objective(make_deployment(inst.candidates, inst.model),
                                           *inst.grid, inst.space);
  EXPECT_NEAR(cache.objective(all), direct, 1e-10 * direct);
}

TEST(ResidualProductTest, RunningMatchesFresh) {
  std::mt19937_64 rng(4);
  auto inst = testing::random_instance(rng, 8, true);
  const VisibilityCache cache(inst.space, *inst.grid, inst.candidates, inst.model);
  ResidualProduct state(cache);
  std::vector<std::size_t> members;
  for (std::size_t k : {3u, 0u, 7u, 5u}) {
    EXPECT_NEAR(state.gain(k), cache.gain(members, k), 1e-12);
    state.add(k);
    members.push_back(k);
    EXPECT_NEAR(state.value(), cache.objective(members), 1e-10);
  }
  const std::vector<double> running(state.product().begin(), state.product().end());
  state.refresh();
  for (std::size_t i = 0; i < running.size(); ++i) {
    EXPECT_DOUBLE_EQ(running[i], state.product()[i]);
  }
}

TEST(DeploymentTest, Validation) {
  const MissionSpace ms = rect_space(10, 10, {rect(4, 4, 6, 6)});
  const SensorModel model{0.1, 5};
  EXPECT_NO_THROW(validate(Deployment{{{1, 1}, model}, {{4, 5}, model}}, ms));
  EXPECT_THROW(validate(Deployment{{{5, 5}, model}}, ms), Error);
  EXPECT_THROW(validate(Deployment{{{1, 1}, model}, {{1, 1}, model}}, ms), Error);
  EXPECT_THROW(validate(SensorModel{-0.1, 5}), Error);
  EXPECT_THROW(validate(SensorModel{0.1, 0}), Error);
}

}  // namespace
}  // namespace covopt
