#include "wedge/svg.hpp"

#include "wedge/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace wedge
{
namespace
{
struct Canvas
{
  double min_x, max_y, scale;

  double sx(double x) const { return (x - min_x) * scale; }
  double sy(double y) const { return (max_y - y) * scale; }
};

void append_num(std::string & out, double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  out += buf;
}

void append_line(std::string & out, Canvas const & c, Point a, Point b,
                 char const * style)
{
  out += "<line x1=\"";
  append_num(out, c.sx(a.x));
  out += "\" y1=\"";
  append_num(out, c.sy(a.y));
  out += "\" x2=\"";
  append_num(out, c.sx(b.x));
  out += "\" y2=\"";
  append_num(out, c.sy(b.y));
  out += "\" ";
  out += style;
  out += "/>\n";
}

void append_dot(std::string & out, Canvas const & c, Point p, double r,
                char const * fill)
{
  out += "<circle cx=\"";
  append_num(out, c.sx(p.x));
  out += "\" cy=\"";
  append_num(out, c.sy(p.y));
  out += "\" r=\"";
  append_num(out, r);
  out += "\" fill=\"";
  out += fill;
  out += "\"/>\n";
}
}  // namespace

std::string render_svg(std::span<Point const> points, Assignment const * assignment,
                       Tolerance const & tol)
{
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!points.empty())
  {
    min_x = max_x = points[0].x;
    min_y = max_y = points[0].y;
    for (Point const & p : points)
    {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  double const diam = std::max(bounding_box_diagonal(points), 1e-9);
  double const pad = 0.15 * diam;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;

  double const world_w = max_x - min_x;
  double const world_h = max_y - min_y;
  double const scale = 800.0 / world_w;
  Canvas const canvas{min_x, max_y, scale};
  double const height = world_h * scale;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"";
  append_num(out, height);
  out += "\" viewBox=\"0 0 800 ";
  append_num(out, height);
  out += "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  int const n = int(points.size());
  if (assignment != nullptr)
  {
    // Edges beneath everything else.
    if (n <= 2000)
    {
      WedgeGraph const graph = build_graph(points, *assignment, tol, 2000);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (graph.adjacent(i, j))
            append_line(out, canvas, points[i], points[j],
                        "stroke=\"#b0c4de\" stroke-width=\"1\"");
    }
    double const ray_len = 1.5 * diam;
    for (Wedge const & w : assignment->wedges)
    {
      Point const lo = unit_direction(double(w.bisector) - w.half_angle);
      Point const hi = unit_direction(double(w.bisector) + w.half_angle);
      append_line(out, canvas, w.apex, w.apex + ray_len * lo,
                  "stroke=\"#999999\" stroke-width=\"0.6\"");
      append_line(out, canvas, w.apex, w.apex + ray_len * hi,
                  "stroke=\"#999999\" stroke-width=\"0.6\"");
    }
  }

  for (Point const & p : points) append_dot(out, canvas, p, 3.0, "#1f77b4");

  if (assignment != nullptr)
  {
    auto anchor = [&](int idx, char const * color) {
      if (idx >= 0 && idx < n) append_dot(out, canvas, points[idx], 6.0, color);
    };
    anchor(assignment->x_index, "#d62728");
    anchor(assignment->z_index, "#ff7f0e");
    anchor(assignment->y_index, "#2ca02c");
    append_dot(out, canvas, assignment->apex_O, 4.0, "#9467bd");
  }

  out += "</svg>\n";
  return out;
}
}  // namespace wedge
