#pragma once

#include "wedge/geometry.hpp"

#include <span>
#include <vector>

namespace wedge
{
// Strictly convex polygon: vertices in counterclockwise order, no three
// collinear, first vertex lexicographically smallest (x, then y).
// source_indices maps each vertex back to its position in the input the
// hull was built from.
struct ConvexPolygon
{
  std::vector<Point> vertices;
  std::vector<int> source_indices;

  int size() const { return static_cast<int>(vertices.size()); }
  Point const & vertex(int i) const { return vertices[wrap(i)]; }
  int wrap(int i) const
  {
    int const n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }
};

struct PolygonStats
{
  double area = 0.0;
  double perimeter = 0.0;
  double diameter = 0.0;
};

// Convex hull of the input points.  Throws TooFewPoints for n < 3 and
// GeneralPositionViolation when the input contains duplicate points or
// a collinear triple lying on the hull boundary (such a triple makes
// contact classification ambiguous downstream).  Interior collinear
// triples are harmless and accepted.
ConvexPolygon convex_hull(std::span<Point const> points);

// Index of the vertex maximizing the projection onto direction, found
// by binary search over the hull.  When an edge is perpendicular to the
// direction (two vertices tie), returns the edge's first endpoint in
// counterclockwise order.
int supporting_vertex(ConvexPolygon const & poly, Point direction);
int supporting_vertex(ConvexPolygon const & poly, Angle direction);

// Area (shoelace), perimeter, and diameter (rotating calipers).
PolygonStats polygon_stats(ConvexPolygon const & poly);
}  // namespace wedge
