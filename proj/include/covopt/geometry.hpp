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

#ifndef COVOPT_GEOMETRY_HPP_
#define COVOPT_GEOMETRY_HPP_

#include <cmath>
#include <span>
#include <vector>

namespace covopt {

// Tolerance, in length units, used by every geometric predicate.
inline constexpr double kGeoEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

struct Box {
  Point min;
  Point max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

// Closest point to p on the closed segment a-b.
Point project_onto_segment(Point p, Point a, Point b);

// A simple polygon with an implicit closing edge. Construction rejects fewer
// than three vertices, non-finite coordinates, zero area and self-intersection.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  // Edge i runs from vertex i to vertex i+1.
  Point edge_start(std::size_t i) const { return vertices_[i]; }
  Point edge_end(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()];
  }

  double area() const;  // unsigned
  double perimeter() const;
  bool is_convex() const { return convex_; }
  const Box& bounds() const { return bounds_; }

  // Closed polygon membership: boundary points are inside.
  bool contains(Point p) const;
  // Strict interior membership: boundary points are outside.
  bool contains_strictly(Point p) const;
  bool on_boundary(Point p) const;

  // Nearest point on the polygon boundary.
  Point nearest_boundary_point(Point p) const;

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  bool crossing_parity(Point p) const;

  std::vector<Point> vertices_;
  Box bounds_;
  bool convex_ = false;
};

bool point_in_polygon(Point p, const Polygon& poly);

// Outer boundary polygon plus obstacles. The feasible space is the closed
// boundary polygon with the obstacle interiors removed.
class MissionSpace {
 public:
  explicit MissionSpace(Polygon boundary, std::vector<Polygon> obstacles = {});

  const Polygon& boundary() const { return boundary_; }
  std::span<const Polygon> obstacles() const { return obstacles_; }
  const Box& bounds() const { return boundary_.bounds(); }
  double diameter() const;

  friend bool operator==(const MissionSpace&, const MissionSpace&) = default;

 private:
  Polygon boundary_;
  std::vector<Polygon> obstacles_;
};

bool is_feasible(Point p, const MissionSpace& ms);

// Line of sight within range: |a-b| <= delta and the closed segment stays in
// the feasible space. Grazing an obstacle vertex or running along an obstacle
// edge does not block.
bool is_visible(Point a, Point b, const MissionSpace& ms, double delta);

// p itself if feasible, else the nearest feasible point on the boundary or on
// an obstacle edge.
Point project_feasible(Point p, const MissionSpace& ms);

}  // namespace covopt

#endif  // COVOPT_GEOMETRY_HPP_
