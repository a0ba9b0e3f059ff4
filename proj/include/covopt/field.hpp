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

#ifndef COVOPT_FIELD_HPP_
#define COVOPT_FIELD_HPP_

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "covopt/geometry.hpp"

namespace covopt {

struct UniformDensity {
  double value = 1.0;

  friend bool operator==(const UniformDensity&, const UniformDensity&) = default;
};

// Piecewise-constant density on a raster anchored at `origin`. Row r covers
// y in [origin.y + r*cell, origin.y + (r+1)*cell); the density is zero off
// the raster.
struct RasterDensity {
  Point origin;
  double cell_size = 1.0;
  std::vector<std::vector<double>> rows;

  double at(Point p) const;

  friend bool operator==(const RasterDensity&, const RasterDensity&) = default;
};

using EventDensity = std::variant<UniformDensity, RasterDensity>;

double density_at(const EventDensity& density, Point p);
// Throws kValidation when any density value is negative or non-finite.
void validate_density(const EventDensity& density);

struct Cell {
  Point center;
  double weight = 0.0;   // cell area
  double density = 0.0;  // R at the center, zero when the center is infeasible
  bool feasible = false;
};

// Midpoint-rule discretization of the boundary's bounding box.
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<Cell> cells, double cell_size, std::size_t columns,
                 std::size_t rows);

  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  double cell_size() const { return cell_size_; }
  // Cells are stored row-major, y outer.
  std::size_t columns() const { return columns_; }
  std::size_t rows() const { return rows_; }

  // weight * density per cell; the measure every integral is taken against.
  std::span<const double> mass() const { return mass_; }
  double total_weight() const;

 private:
  std::vector<Cell> cells_;
  std::vector<double> mass_;
  double cell_size_;
  std::size_t columns_;
  std::size_t rows_;
};

QuadratureGrid build_grid(const MissionSpace& ms, const EventDensity& density,
                          double cell_size);

// sum over cells of weight * density * f(center).
double integrate(const QuadratureGrid& grid,
                 const std::function<double(Point)>& f);
// Same, with f already sampled at every cell.
double integrate(const QuadratureGrid& grid, std::span<const double> values);

struct CandidateSet {
  std::vector<Point> positions;
  double spacing = 0.0;

  std::size_t size() const { return positions.size(); }
};

// Feasible lattice points anchored at the bounding-box minimum corner,
// ordered by y then x.
CandidateSet build_candidates(const MissionSpace& ms, double spacing);

}  // namespace covopt

#endif  // COVOPT_FIELD_HPP_
