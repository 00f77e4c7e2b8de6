#pragma once

#include "wedge/connector.hpp"
#include "wedge/graph.hpp"
#include "wedge/shapes.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace wedge::io
{
// points file: {"points": [[x, y], ...]}
std::vector<Point> read_points(std::istream & in);
std::vector<Point> read_points_file(std::string const & path);
void write_points(std::ostream & out, std::span<Point const> points);
void write_points_file(std::string const & path, std::span<Point const> points);

// assignment file: {"alpha", "case": 1|2, "mirrored", "apex_O",
// "anchors": {"x","z","y"}, "wedges": [{"apex_index","bisector","half_angle"}]}
// Reading reattaches each wedge to its point, so the point list is
// required and apex indices must cover 0..n-1 exactly.
Assignment read_assignment(std::istream & in, std::span<Point const> points);
Assignment read_assignment_file(std::string const & path, std::span<Point const> points);
void write_assignment(std::ostream & out, Assignment const & assignment);
void write_assignment_file(std::string const & path, Assignment const & assignment);

// verify report: {"connected", "diameter": int|"inf", "anchor_path_ok",
// "all_attached", "edge_count"}
void write_report(std::ostream & out, WedgeGraphReport const & report);

// shape file: {"shape": "disk", "center": [x,y], "radius": r}
//           | {"shape": "ellipse", "center": [x,y], "semi_axes": [a,b], "rotation": rad}
//           | {"shape": "polygon", "points": [[x,y], ...]}
SupportableShape read_shape(std::istream & in);
SupportableShape read_shape_file(std::string const & path);
}  // namespace wedge::io
