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

#include "covopt/field.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "covopt/error.hpp"
#include "test_support.hpp"

namespace covopt {
namespace {

using testing::rect;
using testing::rect_space;

TEST(BuildGridTest, SixtyByFiftyRectangle) {
  const MissionSpace ms = rect_space(60, 50);
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, 1.0);
  EXPECT_EQ(grid.size(), 3000u);
  EXPECT_EQ(grid.columns(), 60u);
  EXPECT_EQ(grid.rows(), 50u);
  EXPECT_DOUBLE_EQ(integrate(grid, [](Point) { return 1.0; }), 3000.0);
  EXPECT_DOUBLE_EQ(grid.total_weight(), 3000.0);
}

TEST(BuildGridTest, ObstacleRemovesDensity) {
  const MissionSpace ms = rect_space(1, 1, {rect(0, 0, 0.5, 1)});
  const double h = 0.1;
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, h);
  EXPECT_NEAR(integrate(grid, [](Point) { return 1.0; }), 0.5, 2 * h);
  for (const Cell& c : grid.cells()) {
    if (!c.feasible) EXPECT_EQ(c.density, 0.0);
  }
}

TEST(BuildGridTest, ZeroDensity) {
  const QuadratureGrid grid = build_grid(rect_space(4, 4), UniformDensity{0.0}, 0.5);
  for (const Cell& c : grid.cells()) EXPECT_EQ(c.density, 0.0);
}

TEST(BuildGridTest, RejectsBadCellSize) {
  const MissionSpace ms = rect_space(4, 4);
  EXPECT_THROW(build_grid(ms, UniformDensity{1.0}, 0.0), Error);
  EXPECT_THROW(build_grid(ms, UniformDensity{1.0}, -1.0), Error);
  EXPECT_THROW(build_grid(ms, UniformDensity{1.0}, 2.0), Error);
  EXPECT_THROW(build_grid(ms, UniformDensity{-1.0}, 1.0), Error);
}

TEST(BuildGridTest, WeightsCoverBoundingBox) {
  // 7.3 is not a multiple of h; the slack is at most one cell strip.
  const MissionSpace ms = rect_space(7.3, 5.0);
  const double h = 0.5;
  const QuadratureGrid grid = build_grid(ms, UniformDensity{1.0}, h);
  EXPECT_NEAR(grid.total_weight(), 7.3 * 5.0, h * 2 * (7.3 + 5.0));
}

TEST(IntegrateTest, PatchDensity) {
  RasterDensity patch;
  patch.origin = {20, 20};
  patch.cell_size = 10;
  patch.rows = {{1.0}};
  const QuadratureGrid grid = build_grid(rect_space(60, 50), patch, 1.0);
  EXPECT_NEAR(integrate(grid, [](Point) { return 1.0; }), 100.0, 1.0 * 40.0);
  EXPECT_DOUBLE_EQ(integrate(grid, [](Point) { return 0.0; }), 0.0);
}

TEST(IntegrateTest, LinearAndMonotone) {
  const QuadratureGrid grid = build_grid(rect_space(6, 5), UniformDensity{2.0}, 0.5);
  auto f = [](Point p) { return p.x * p.x; };
  auto g = [](Point p) { return p.x * p.x + std::abs(std::sin(p.y)); };
  const double fi = integrate(grid, f);
  const double gi = integrate(grid, g);
  EXPECT_LE(fi, gi);
  EXPECT_NEAR(integrate(grid, [&](Point p) { return 3.0 * f(p) - 2.0 * g(p); }),
              3.0 * fi - 2.0 * gi, 1e-9);
}

TEST(IntegrateTest, RefinementConverges) {
  const MissionSpace ms = rect_space(6, 4);
  auto f = [](Point p) { return std::exp(-0.3 * std::hypot(p.x - 2.2, p.y - 1.7)); };
  double previous_diff = INFINITY;
  double previous = integrate(build_grid(ms, UniformDensity{1.0}, 1.0), f);
  for (double h : {0.5, 0.25, 0.125}) {
    const double current = integrate(build_grid(ms, UniformDensity{1.0}, h), f);
    const double diff = std::abs(current - previous);
    EXPECT_LT(diff, previous_diff);
    previous_diff = diff;
    previous = current;
  }
  EXPECT_LT(previous_diff, 1e-2);
}

TEST(CandidatesTest, LatticeIncludesBoundary) {
  const CandidateSet set = build_candidates(rect_space(60, 50), 10.0);
  ASSERT_EQ(set.size(), 42u);
  EXPECT_EQ(set.positions.front(), (Point{0, 0}));
  EXPECT_EQ(set.positions[1], (Point{10, 0}));
  EXPECT_EQ(set.positions[7], (Point{0, 10}));
  EXPECT_EQ(set.positions.back(), (Point{60, 50}));
}

TEST(CandidatesTest, SpacingLargerThanSpace) {
  const CandidateSet set = build_candidates(rect_space(60, 50), 100.0);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.positions[0], (Point{0, 0}));
}

TEST(CandidatesTest, SkipsObstacleInteriors) {
  const MissionSpace ms = rect_space(60, 50, {rect(5, 5, 25, 25)});
  const CandidateSet set = build_candidates(ms, 10.0);
  // (10,10), (20,10), (10,20), (20,20) are strictly inside.
  EXPECT_EQ(set.size(), 38u);
  for (const Point& p : set.positions) EXPECT_TRUE(is_feasible(p, ms));
}

TEST(CandidatesTest, AllInsideObstacleIsAnError) {
  // Lattice points (4,8), (8,4), (8,8) fall inside the obstacle; the rest lie
  // outside the triangular boundary.
  const MissionSpace ms(Polygon({{0, 10}, {10, 0}, {10, 10}}),
                        {Polygon({{1.5, 9.8}, {9.8, 1.5}, {9.8, 9.8}})});
  try {
    build_candidates(ms, 4.0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyCandidateSet);
  }
  EXPECT_THROW(build_candidates(rect_space(5, 5), 0.0), Error);
}

TEST(CandidatesTest, Deterministic) {
  const MissionSpace ms = rect_space(37, 23, {rect(5, 5, 12, 9)});
  const CandidateSet a = build_candidates(ms, 3.0);
  const CandidateSet b = build_candidates(ms, 3.0);
  EXPECT_EQ(a.positions, b.positions);
}

}  // namespace
}  // namespace covopt
