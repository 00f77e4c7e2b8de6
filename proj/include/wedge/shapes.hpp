#pragma once

#include "wedge/hull.hpp"

#include <variant>
#include <vector>

namespace wedge
{
struct Disk
{
  Point center;
  double radius = 1.0;
};

struct Ellipse
{
  Point center;
  double a = 1.0;  // semi-axis along the rotated x direction
  double b = 1.0;  // semi-axis along the rotated y direction
  Angle rotation;
};

// Compact convex sets the tangency machinery can support: a polygon
// (hull of a point set), an ellipse, or a disk.
using SupportableShape = std::variant<ConvexPolygon, Ellipse, Disk>;

// Supporting line data for a unit outward normal: the support value
// h = max over the shape of dot(p, n), and one extreme point attaining
// it (for polygons, ties resolve like supporting_vertex).
struct Support
{
  double value = 0.0;
  Point contact;
};

Support support(SupportableShape const & shape, Point unit_normal);

double shape_diameter(SupportableShape const & shape);

// Perimeter; the ellipse case evaluates the complete elliptic integral
// of the second kind.
double shape_perimeter(SupportableShape const & shape);

// Boundary sample for containment checks: polygon vertices (convexity
// makes vertex containment sufficient), or samples along the conic.
std::vector<Point> boundary_points(SupportableShape const & shape, int samples);

bool is_strictly_convex(SupportableShape const & shape);
}  // namespace wedge
