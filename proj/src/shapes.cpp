#include "wedge/shapes.hpp"

#include "wedge/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wedge
{
namespace
{
struct SupportVisitor
{
  Point n;

  Support operator()(ConvexPolygon const & poly) const
  {
    int const i = supporting_vertex(poly, n);
    return {dot(poly.vertices[i], n), poly.vertices[i]};
  }

  Support operator()(Ellipse const & e) const
  {
    // In the frame where the ellipse is axis-aligned at the origin, the
    // boundary point with outward normal m is (a^2 m_x, b^2 m_y) / L,
    // L = sqrt(a^2 m_x^2 + b^2 m_y^2), and the support value is L.
    Point const m = rotated(n, -e.rotation.rad);
    double const L = std::sqrt(e.a * e.a * m.x * m.x + e.b * e.b * m.y * m.y);
    Point const local{e.a * e.a * m.x / L, e.b * e.b * m.y / L};
    return {dot(e.center, n) + L, e.center + rotated(local, e.rotation.rad)};
  }

  Support operator()(Disk const & d) const
  {
    return {dot(d.center, n) + d.radius, d.center + d.radius * n};
  }
};
}  // namespace

Support support(SupportableShape const & shape, Point unit_normal)
{
  return std::visit(SupportVisitor{unit_normal}, shape);
}

double shape_diameter(SupportableShape const & shape)
{
  return std::visit(
      [](auto const & s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return polygon_stats(s).diameter;
        else if constexpr (std::is_same_v<T, Ellipse>)
          return 2.0 * std::max(s.a, s.b);
        else
          return 2.0 * s.radius;
      },
      shape);
}

double shape_perimeter(SupportableShape const & shape)
{
  return std::visit(
      [](auto const & s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return polygon_stats(s).perimeter;
        else if constexpr (std::is_same_v<T, Ellipse>)
        {
          double const major = std::max(s.a, s.b);
          double const minor = std::min(s.a, s.b);
          double const ecc = std::sqrt(1.0 - (minor * minor) / (major * major));
          return 4.0 * major * std::comp_ellint_2(ecc);
        }
        else
          return kTwoPi * s.radius;
      },
      shape);
}

std::vector<Point> boundary_points(SupportableShape const & shape, int samples)
{
  return std::visit(
      [samples](auto const & s) -> std::vector<Point> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return s.vertices;
        else
        {
          std::vector<Point> pts;
          pts.reserve(samples);
          for (int k = 0; k < samples; ++k)
          {
            double const t = kTwoPi * k / samples;
            if constexpr (std::is_same_v<T, Ellipse>)
              pts.push_back(s.center +
                            rotated({s.a * std::cos(t), s.b * std::sin(t)}, s.rotation.rad));
            else
              pts.push_back(s.center + s.radius * unit_direction(t));
          }
          return pts;
        }
      },
      shape);
}

bool is_strictly_convex(SupportableShape const & shape)
{
  return !std::holds_alternative<ConvexPolygon>(shape);
}
}  // namespace wedge
