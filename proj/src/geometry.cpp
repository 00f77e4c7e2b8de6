#include "wedge/geometry.hpp"

#include "wedge/errors.hpp"
#include "wedge/predicates.hpp"

#include <algorithm>

namespace wedge
{
int orientation(Point p, Point q, Point r)
{
  double const d = predicates::orient2d(p.x, p.y, q.x, q.y, r.x, r.y);
  return (d > 0.0) - (d < 0.0);
}

bool wedge_contains(Wedge const & w, Point p, Tolerance const & tol)
{
  Point const v = p - w.apex;
  if (v.x == 0.0 && v.y == 0.0)
    return true;

  Point const lo = unit_direction(w.bisector.rad - w.half_angle);
  Point const hi = unit_direction(w.bisector.rad + w.half_angle);

  // p is inside iff v lies counterclockwise of the low boundary ray and
  // clockwise of the high one.  The slack admits points up to eps_ang
  // radians outside either ray; comparing squared cross products against
  // eps^2 * |v|^2 avoids the square root (sin x ~ x at this scale).
  double const c_lo = cross(lo, v);
  double const c_hi = cross(hi, v);
  double const slack_sq = tol.eps_ang * tol.eps_ang * squared_norm(v);
  bool const above_lo = c_lo >= 0.0 || c_lo * c_lo <= slack_sq;
  bool const below_hi = c_hi <= 0.0 || c_hi * c_hi <= slack_sq;
  return above_lo && below_hi;
}

Wedge wedge_from_points(Point a, Point b, Point c)
{
  Point const va = a - b;
  Point const vc = c - b;
  if ((va.x == 0.0 && va.y == 0.0) || (vc.x == 0.0 && vc.y == 0.0))
    throw DegenerateWedge("wedge_from_points: defining point coincides with the apex");

  double const ta = std::atan2(va.y, va.x);
  double const tc = std::atan2(vc.y, vc.x);
  double const d = signed_angle_difference(tc, ta);
  double const half = 0.5 * std::fabs(d);
  if (half <= 0.0 || half >= 0.5 * kPi)
    throw DegenerateWedge("wedge_from_points: defining points are collinear with the apex");

  return {b, Angle(ta + 0.5 * d), half};
}

std::array<Point, 2> apex_candidates(Point x, Point y, double alpha)
{
  if (x == y)
    throw DegenerateWedge("apex_candidates: contact points coincide");
  if (!(alpha > 0.0) || !(alpha < kPi))
    throw DegenerateWedge("apex_candidates: opening angle must lie in (0, pi)");

  Point const mid = 0.5 * (x + y);
  Point const v = y - x;
  double const len = norm(v);
  // Inscribed-angle construction: the apex sits on the perpendicular
  // bisector of xy at distance (|xy|/2) * cot(alpha/2) from the midpoint.
  double const h = 0.5 * len / std::tan(0.5 * alpha);
  Point const n = (1.0 / len) * perpendicular(v);
  return {mid + h * n, mid - h * n};
}

double bounding_box_diagonal(std::span<Point const> points)
{
  if (points.empty())
    return 0.0;
  double xmin = points[0].x, xmax = points[0].x;
  double ymin = points[0].y, ymax = points[0].y;
  for (Point const & p : points)
  {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}
}  // namespace wedge
