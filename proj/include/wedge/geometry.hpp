#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>

namespace wedge
{
inline double constexpr kPi = std::numbers::pi;
inline double constexpr kTwoPi = 2.0 * std::numbers::pi;

struct Point
{
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double squared_norm(Point a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point a) { return std::sqrt(squared_norm(a)); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point perpendicular(Point a) { return {-a.y, a.x}; }

inline Point rotated(Point v, double radians)
{
  double const c = std::cos(radians);
  double const s = std::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline double normalize_radians(double r)
{
  double a = std::fmod(r, kTwoPi);
  if (a < 0.0)
    a += kTwoPi;
  if (a >= kTwoPi)  // fmod can land exactly on 2*pi after the correction
    a = 0.0;
  return a;
}

// a - b wrapped into (-pi, pi].
inline double signed_angle_difference(double a, double b)
{
  double d = std::fmod(a - b, kTwoPi);
  if (d <= -kPi)
    d += kTwoPi;
  else if (d > kPi)
    d -= kTwoPi;
  return d;
}

// Radians kept normalized to [0, 2*pi).  Converts implicitly so angle
// arithmetic stays ordinary; re-wrapping happens on every construction.
struct Angle
{
  Angle() = default;
  Angle(double radians) : rad(normalize_radians(radians)) {}
  operator double() const { return rad; }

  double rad = 0.0;
};

inline Point unit_direction(double radians) { return {std::cos(radians), std::sin(radians)}; }
inline Angle direction_angle(Point v) { return Angle(std::atan2(v.y, v.x)); }

struct Ray
{
  Point origin;
  Angle direction;
};

// Closed planar sector: apex plus every direction within half_angle of
// the bisector.  Invariant: 0 < half_angle < pi/2, so the opening stays
// strictly below pi and the sector is the intersection of two
// half-planes through the apex.
struct Wedge
{
  Point apex;
  Angle bisector;
  double half_angle = 0.0;
};

// eps_len is relative to the bounding-box diagonal of the instance at
// hand; eps_ang is an absolute angular slack in radians.
struct Tolerance
{
  double eps_len = 1e-9;
  double eps_ang = 1e-9;
};

// Exact sign of the turn p -> q -> r: +1 left (counterclockwise),
// -1 right, 0 collinear.  Never wrong, regardless of coordinate scale.
int orientation(Point p, Point q, Point r);

// Closed containment with angular slack tol.eps_ang; the apex itself is
// always contained.
bool wedge_contains(Wedge const & w, Point p, Tolerance const & tol = {});

// Wedge with apex b whose boundary rays pass through a and c.  Throws
// DegenerateWedge when either point coincides with b or the three are
// collinear (opening would be 0 or pi).
Wedge wedge_from_points(Point a, Point b, Point c);

// The two apexes O, mirror images across line xy, with |Ox| = |Oy| and
// angle xOy = alpha.  First candidate lies on the left of x -> y.
// Throws DegenerateWedge when x == y or alpha is outside (0, pi).
std::array<Point, 2> apex_candidates(Point x, Point y, double alpha);

double bounding_box_diagonal(std::span<Point const> points);
}  // namespace wedge
