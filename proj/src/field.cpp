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

#include <cmath>
#include <string>

#include "covopt/error.hpp"

namespace covopt {

double RasterDensity::at(Point p) const {
  const double fr = std::floor((p.y - origin.y) / cell_size);
  if (fr < 0.0 || fr >= static_cast<double>(rows.size())) return 0.0;
  const auto& row = rows[static_cast<std::size_t>(fr)];
  const double fc = std::floor((p.x - origin.x) / cell_size);
  if (fc < 0.0 || fc >= static_cast<double>(row.size())) return 0.0;
  return row[static_cast<std::size_t>(fc)];
}

double density_at(const EventDensity& density, Point p) {
  return std::visit(
      [p](const auto& d) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, UniformDensity>) {
          return d.value;
        } else {
          return d.at(p);
        }
      },
      density);
}

void validate_density(const EventDensity& density) {
  auto check = [](double v) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::kValidation,
                  "event density must be finite and non-negative, got " +
                      std::to_string(v));
    }
  };
  if (const auto* u = std::get_if<UniformDensity>(&density)) {
    check(u->value);
    return;
  }
  const auto& raster = std::get<RasterDensity>(density);
  if (!(raster.cell_size > 0.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "density raster cell size must be positive");
  }
  for (const auto& row : raster.rows) {
    for (double v : row) check(v);
  }
}

QuadratureGrid::QuadratureGrid(std::vector<Cell> cells, double cell_size,
                               std::size_t columns, std::size_t rows)
    : cells_(std::move(cells)),
      cell_size_(cell_size),
      columns_(columns),
      rows_(rows) {
  mass_.reserve(cells_.size());
  for (const Cell& c : cells_) mass_.push_back(c.weight * c.density);
}

double QuadratureGrid::total_weight() const {
  double total = 0.0;
  for (const Cell& c : cells_) total += c.weight;
  return total;
}

QuadratureGrid build_grid(const MissionSpace& ms, const EventDensity& density,
                          double cell_size) {
  const Box& box = ms.bounds();
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw Error(ErrorKind::kInvalidParameter,
                "grid cell size must be positive, got " + std::to_string(cell_size));
  }
  if (cell_size > std::min(box.width(), box.height()) / 4.0 + kGeoEps) {
    throw Error(ErrorKind::kInvalidParameter,
                "grid cell size " + std::to_string(cell_size) +
                    " exceeds a quarter of the smaller bounding-box side");
  }
  validate_density(density);

  const auto columns =
      static_cast<std::size_t>(std::ceil(box.width() / cell_size - 1e-9));
  const auto rows =
      static_cast<std::size_t>(std::ceil(box.height() / cell_size - 1e-9));
  const double weight = cell_size * cell_size;
  std::vector<Cell> cells;
  cells.reserve(columns * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      Cell cell;
      cell.center = {box.min.x + (static_cast<double>(c) + 0.5) * cell_size,
                     box.min.y + (static_cast<double>(r) + 0.5) * cell_size};
      cell.weight = weight;
      cell.feasible = is_feasible(cell.center, ms);
      cell.density = cell.feasible ? density_at(density, cell.center) : 0.0;
      cells.push_back(cell);
    }
  }
  return QuadratureGrid(std::move(cells), cell_size, columns, rows);
}

double integrate(const QuadratureGrid& grid,
                 const std::function<double(Point)>& f) {
  double total = 0.0;
  const auto mass = grid.mass();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (mass[i] != 0.0) total += mass[i] * f(grid[i].center);
  }
  return total;
}

double integrate(const QuadratureGrid& grid, std::span<const double> values) {
  double total = 0.0;
  const auto mass = grid.mass();
  for (std::size_t i = 0; i < grid.size(); ++i) total += mass[i] * values[i];
  return total;
}

CandidateSet build_candidates(const MissionSpace& ms, double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw Error(ErrorKind::kInvalidParameter,
                "candidate spacing must be positive, got " + std::to_string(spacing));
  }
  const Box& box = ms.bounds();
  const auto columns =
      static_cast<std::size_t>(std::floor(box.width() / spacing + 1e-9)) + 1;
  const auto rows =
      static_cast<std::size_t>(std::floor(box.height() / spacing + 1e-9)) + 1;
  CandidateSet set;
  set.spacing = spacing;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      const Point p{box.min.x + static_cast<double>(c) * spacing,
                    box.min.y + static_cast<double>(r) * spacing};
      if (is_feasible(p, ms)) set.positions.push_back(p);
    }
  }
  if (set.positions.empty()) {
    throw Error(ErrorKind::kEmptyCandidateSet,
                "no feasible lattice point at spacing " + std::to_string(spacing));
  }
  return set;
}

}  // namespace covopt
