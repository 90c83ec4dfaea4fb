#pragma once

#include <vector>

#include "latspan/steering.hpp"

namespace latspan {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Convex polygon, vertices in either winding order.
struct Polygon {
  std::vector<Vec2> points;
};

struct Bounds {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  bool contains(const Vec2& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

/// Vehicle rectangle; the reference point sits `rear_offset` ahead of the rear bumper.
struct Footprint {
  double length = 4.0;
  double width = 2.0;
  double rear_offset = 1.0;
};

/// Throws InvalidArgument for fewer than three points, zero area or a non-convex outline.
void validate_polygon(const Polygon& p);

/// Separating-axis test; touching boundaries count as intersecting.
bool polygons_intersect(const Polygon& a, const Polygon& b);

Polygon footprint_polygon(const Configuration& c, const Footprint& fp);

/// Obstacle set with cached bounding boxes for a cheap broad phase.
class CollisionWorld {
 public:
  CollisionWorld(Bounds bounds, std::vector<Polygon> obstacles, Footprint footprint);

  /// True when the footprint at `c` (shifted by dx, dy) stays in bounds and clear of obstacles.
  bool configuration_free(const Configuration& c, double dx = 0.0, double dy = 0.0) const;

  /// Checks every trace sample of `m`, shifted by (dx, dy).
  bool motion_free(const Motion& m, double dx = 0.0, double dy = 0.0) const;

  const Bounds& bounds() const { return bounds_; }
  const std::vector<Polygon>& obstacles() const { return obstacles_; }
  const Footprint& footprint() const { return footprint_; }

 private:
  Bounds bounds_;
  std::vector<Polygon> obstacles_;
  std::vector<Bounds> boxes_;
  Footprint footprint_;
  double reach_ = 0.0;  // radius of the footprint around the reference point
};

}  // namespace latspan
