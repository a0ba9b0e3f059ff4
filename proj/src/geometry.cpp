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

#include "covopt/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "covopt/error.hpp"

namespace covopt {
namespace {

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double segment_distance(Point p, Point a, Point b) {
  return distance(p, project_onto_segment(p, a, b));
}

// Closed segments a-b and c-d share at least one point (within kGeoEps).
bool segments_touch(Point a, Point b, Point c, Point d) {
  const Point r = b - a;
  const Point s = d - c;
  const double denom = cross(r, s);
  if (std::abs(denom) > 1e-12 * norm(r) * norm(s)) {
    const double t = cross(c - a, s) / denom;
    const double u = cross(c - a, r) / denom;
    const double tol_t = kGeoEps / norm(r);
    const double tol_u = kGeoEps / norm(s);
    if (t >= -tol_t && t <= 1.0 + tol_t && u >= -tol_u && u <= 1.0 + tol_u) {
      return true;
    }
  }
  return segment_distance(a, c, d) <= kGeoEps ||
         segment_distance(b, c, d) <= kGeoEps ||
         segment_distance(c, a, b) <= kGeoEps ||
         segment_distance(d, a, b) <= kGeoEps;
}

// Proper crossing: the segments intersect at a single point interior to both.
bool segments_cross(Point a, Point b, Point c, Point d) {
  const Point r = b - a;
  const Point s = d - c;
  const double denom = cross(r, s);
  if (std::abs(denom) <= 1e-12 * norm(r) * norm(s)) return false;
  const double t = cross(c - a, s) / denom;
  const double u = cross(c - a, r) / denom;
  const double tol_t = kGeoEps / norm(r);
  const double tol_u = kGeoEps / norm(s);
  return t > tol_t && t < 1.0 - tol_t && u > tol_u && u < 1.0 - tol_u;
}

double signed_area(std::span<const Point> v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    twice += cross(v[i], v[(i + 1) % v.size()]);
  }
  return 0.5 * twice;
}

// Parameters t in [0, 1] at which a + t*d meets the polygon boundary. For a
// collinear overlap both ends of the overlap are reported.
void collect_boundary_hits(Point a, Point d, const Polygon& poly,
                           std::vector<double>& ts) {
  const double len_d = norm(d);
  const double len2_d = len_d * len_d;
  const double tol_t = kGeoEps / len_d;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point p = poly.edge_start(i);
    const Point q = poly.edge_end(i);
    const Point e = q - p;
    const double len_e = norm(e);
    const double denom = cross(d, e);
    if (std::abs(denom) > 1e-12 * len_d * len_e) {
      const double t = cross(p - a, e) / denom;
      const double u = cross(p - a, d) / denom;
      const double tol_u = kGeoEps / len_e;
      if (t >= -tol_t && t <= 1.0 + tol_t && u >= -tol_u && u <= 1.0 + tol_u) {
        ts.push_back(std::clamp(t, 0.0, 1.0));
      }
    } else if (std::abs(cross(p - a, d)) / len_d <= kGeoEps) {
      for (Point end : {p, q}) {
        const double t = dot(end - a, d) / len2_d;
        if (t >= -tol_t && t <= 1.0 + tol_t) ts.push_back(std::clamp(t, 0.0, 1.0));
      }
    }
  }
}

bool boxes_overlap(const Box& box, Point a, Point b) {
  return std::max(a.x, b.x) >= box.min.x - kGeoEps &&
         std::min(a.x, b.x) <= box.max.x + kGeoEps &&
         std::max(a.y, b.y) >= box.min.y - kGeoEps &&
         std::min(a.y, b.y) <= box.max.y + kGeoEps;
}

// Splits the segment at every boundary hit and tests each piece's midpoint.
template <typename BlockedAt>
bool segment_blocked(Point a, Point b, const Polygon& poly, BlockedAt blocked) {
  const Point d = b - a;
  std::vector<double> ts{0.0, 1.0};
  collect_boundary_hits(a, d, poly, ts);
  std::sort(ts.begin(), ts.end());
  const double min_gap = kGeoEps / norm(d);
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k + 1] - ts[k] <= min_gap) continue;
    const double mid = 0.5 * (ts[k] + ts[k + 1]);
    if (blocked(a + mid * d)) return true;
  }
  return false;
}

}  // namespace

Point project_onto_segment(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return a + t * d;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorKind::kValidation,
                "polygon needs at least 3 vertices, got " +
                    std::to_string(vertices_.size()));
  }
  for (const Point& p : vertices_) {
    if (!is_finite(p)) {
      throw Error(ErrorKind::kValidation, "polygon vertex is not finite");
    }
  }
  if (std::abs(signed_area(vertices_)) <= kGeoEps) {
    throw Error(ErrorKind::kValidation, "polygon has zero area");
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(edge_start(i), edge_end(i), edge_start(j),
                         edge_end(j))) {
        throw Error(ErrorKind::kValidation,
                    "polygon is self-intersecting: edges " + std::to_string(i) +
                        " and " + std::to_string(j));
      }
    }
  }

  bounds_ = {vertices_[0], vertices_[0]};
  for (const Point& p : vertices_) {
    bounds_.min.x = std::min(bounds_.min.x, p.x);
    bounds_.min.y = std::min(bounds_.min.y, p.y);
    bounds_.max.x = std::max(bounds_.max.x, p.x);
    bounds_.max.y = std::max(bounds_.max.y, p.y);
  }

  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double turn = cross(vertex(i + 1) - vertex(i), vertex(i + 2) - vertex(i + 1));
    has_pos |= turn > kGeoEps;
    has_neg |= turn < -kGeoEps;
  }
  convex_ = !(has_pos && has_neg);
}

double Polygon::area() const { return std::abs(signed_area(vertices_)); }

double Polygon::perimeter() const {
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    total += distance(edge_start(i), edge_end(i));
  }
  return total;
}

bool Polygon::on_boundary(Point p) const {
  if (p.x < bounds_.min.x - kGeoEps || p.x > bounds_.max.x + kGeoEps ||
      p.y < bounds_.min.y - kGeoEps || p.y > bounds_.max.y + kGeoEps) {
    return false;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (segment_distance(p, edge_start(i), edge_end(i)) <= kGeoEps) return true;
  }
  return false;
}

bool Polygon::crossing_parity(Point p) const {
  bool inside = false;
  const std::size_t n = size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& vi = vertices_[i];
    const Point& vj = vertices_[j];
    if ((vi.y > p.y) != (vj.y > p.y)) {
      const double x_at = vj.x + (p.y - vj.y) * (vi.x - vj.x) / (vi.y - vj.y);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside;
}

bool Polygon::contains(Point p) const {
  if (p.x < bounds_.min.x - kGeoEps || p.x > bounds_.max.x + kGeoEps ||
      p.y < bounds_.min.y - kGeoEps || p.y > bounds_.max.y + kGeoEps) {
    return false;
  }
  return on_boundary(p) || crossing_parity(p);
}

bool Polygon::contains_strictly(Point p) const {
  if (p.x < bounds_.min.x || p.x > bounds_.max.x || p.y < bounds_.min.y ||
      p.y > bounds_.max.y) {
    return false;
  }
  return !on_boundary(p) && crossing_parity(p);
}

Point Polygon::nearest_boundary_point(Point p) const {
  Point best = vertices_[0];
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) {
    const Point q = project_onto_segment(p, edge_start(i), edge_end(i));
    const double dist = distance(p, q);
    if (dist < best_dist) {
      best_dist = dist;
      best = q;
    }
  }
  return best;
}

bool point_in_polygon(Point p, const Polygon& poly) { return poly.contains(p); }

MissionSpace::MissionSpace(Polygon boundary, std::vector<Polygon> obstacles)
    : boundary_(std::move(boundary)), obstacles_(std::move(obstacles)) {
  for (std::size_t k = 0; k < obstacles_.size(); ++k) {
    const Polygon& obstacle = obstacles_[k];
    for (const Point& v : obstacle.vertices()) {
      if (!boundary_.contains(v)) {
        throw Error(ErrorKind::kValidation,
                    "obstacle " + std::to_string(k) +
                        " has a vertex outside the boundary");
      }
    }
  }
  for (std::size_t k = 0; k < obstacles_.size(); ++k) {
    for (std::size_t m = k + 1; m < obstacles_.size(); ++m) {
      const Polygon& a = obstacles_[k];
      const Polygon& b = obstacles_[m];
      bool overlap = false;
      for (std::size_t i = 0; i < a.size() && !overlap; ++i) {
        for (std::size_t j = 0; j < b.size() && !overlap; ++j) {
          overlap = segments_cross(a.edge_start(i), a.edge_end(i),
                                   b.edge_start(j), b.edge_end(j));
        }
      }
      for (const Point& v : a.vertices()) overlap = overlap || b.contains_strictly(v);
      for (const Point& v : b.vertices()) overlap = overlap || a.contains_strictly(v);
      if (overlap) {
        throw Error(ErrorKind::kValidation,
                    "obstacles " + std::to_string(k) + " and " +
                        std::to_string(m) + " have overlapping interiors");
      }
    }
  }
}

double MissionSpace::diameter() const {
  double best = 0.0;
  const auto v = boundary_.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      best = std::max(best, distance(v[i], v[j]));
    }
  }
  return best;
}

bool is_feasible(Point p, const MissionSpace& ms) {
  if (!ms.boundary().contains(p)) return false;
  for (const Polygon& obstacle : ms.obstacles()) {
    if (obstacle.contains_strictly(p)) return false;
  }
  return true;
}

bool is_visible(Point a, Point b, const MissionSpace& ms, double delta) {
  const double length = distance(a, b);
  if (length > delta + kGeoEps) return false;
  if (length <= kGeoEps) return true;
  if (!ms.boundary().is_convex() &&
      segment_blocked(a, b, ms.boundary(), [&](Point m) {
        return !ms.boundary().contains(m);
      })) {
    return false;
  }
  for (const Polygon& obstacle : ms.obstacles()) {
    if (!boxes_overlap(obstacle.bounds(), a, b)) continue;
    if (segment_blocked(a, b, obstacle, [&](Point m) {
          return obstacle.contains_strictly(m);
        })) {
      return false;
    }
  }
  return true;
}

Point project_feasible(Point p, const MissionSpace& ms) {
  if (is_feasible(p, ms)) return p;
  Point best = ms.boundary().nearest_boundary_point(p);
  double best_dist = std::numeric_limits<double>::infinity();
  auto consider = [&](const Polygon& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point q = project_onto_segment(p, poly.edge_start(i), poly.edge_end(i));
      const double dist = distance(p, q);
      if (dist < best_dist && is_feasible(q, ms)) {
        best_dist = dist;
        best = q;
      }
    }
  };
  consider(ms.boundary());
  for (const Polygon& obstacle : ms.obstacles()) consider(obstacle);
  return best;
}

}  // namespace covopt
