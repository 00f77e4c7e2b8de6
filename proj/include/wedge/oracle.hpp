#pragma once

#include "wedge/icecream.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wedge::oracle
{
// Gift-wrapping hull, O(n*h).  Reference for the fast hull: identical
// output (vertex and source-index sequences) and identical rejection
// behaviour on degenerate input.
ConvexPolygon naive_hull(std::span<Point const> points);

// Every vertex pair (X, Y) with both apex candidates, kept when the
// resulting wedge contains all hull vertices.  Quadratic; reference
// for find_good_pair.
std::vector<GoodPair> exhaustive_good_pair(ConvexPolygon const & hull,
                                           double alpha = kPi / 3.0,
                                           Tolerance const & tol = {});

// Exhaustive search over k^n bisector combinations on a uniform
// direction grid; returns the lexicographically first (by direction
// index) combination whose mutual-containment graph is connected, as
// one wedge per point.  Demonstration tool, n <= 5.
std::optional<std::vector<Wedge>> grid_search_assignment(std::span<Point const> points,
                                                         double alpha, int k,
                                                         Tolerance const & tol = {});

// Tangent length from the apex of an alpha-wedge circumscribing a disk
// of the given radius: radius * cot(alpha / 2).
double disk_reference(double radius, double alpha);
}  // namespace wedge::oracle
