#include "wedge/connector.hpp"

#include "wedge/errors.hpp"
#include "wedge/hull.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace wedge
{
namespace
{
// Intersection of lines p0 + t*u0 and p1 + s*u1.
Point line_point_intersection(Point p0, Point u0, Point p1, Point u1)
{
  double const den = cross(u0, u1);
  if (std::abs(den) < 1e-300)
    throw DegenerateBaseline("baseline construction hit parallel lines");
  double const t = cross(p1 - p0, u1) / den;
  return p0 + t * u0;
}

// Bisector of the good-pair wedge at O, pointing into the hull, and
// the signed opening from ray q to ray r.
struct PairFrame
{
  Angle bisector;
  Point u;      // unit bisector direction
  double turn;  // signed angle from q to r (|turn| == alpha)
};

PairFrame pair_frame(GoodPair const & good)
{
  double const dq = direction_angle(good.contact_X - good.apex_O);
  double const dr = direction_angle(good.contact_Y - good.apex_O);
  double const turn = signed_angle_difference(dr, dq);
  Angle const bis(dq + 0.5 * turn);
  return {bis, unit_direction(bis), turn};
}

Angle mid_direction(Point apex, Point toward_a, Point toward_b)
{
  double const da = direction_angle(toward_a - apex);
  double const db = direction_angle(toward_b - apex);
  return Angle(da + 0.5 * signed_angle_difference(db, da));
}

// Wedge with one boundary ray along `edge_dir` from `apex`, opening
// alpha toward `toward`.
Wedge anchored_wedge(Point apex, double edge_dir, Point toward, double alpha)
{
  double const d_toward = direction_angle(toward - apex);
  double const turn = signed_angle_difference(d_toward, edge_dir);
  double const sign = turn < 0.0 ? -1.0 : 1.0;
  return Wedge{apex, Angle(edge_dir + sign * 0.5 * alpha), 0.5 * alpha};
}

void require_alpha(double alpha)
{
  if (!(alpha > 0.0) || !(alpha < kPi))
    throw InvalidInput("wedge opening must lie in (0, pi), got " + std::to_string(alpha));
}
}  // namespace

BaselineFrame baseline(GoodPair const & good, ConvexPolygon const & hull, double alpha)
{
  require_alpha(alpha);
  PairFrame const pf = pair_frame(good);

  int const z_hull = supporting_vertex(hull, pf.u);
  if (z_hull == good.hull_index_X || z_hull == good.hull_index_Y)
    throw DegenerateBaseline("supporting vertex coincides with a contact point");

  BaselineFrame frame;
  frame.good = good;
  frame.alpha = alpha;
  frame.Z = hull.vertices[z_hull];
  frame.Z_hull_index = z_hull;
  frame.Z_index = hull.source_indices[z_hull];

  // ell runs through Z perpendicular to the bisector, oriented from the
  // q side (A) toward the r side (B).
  double const d_ell = double(pf.bisector) + (pf.turn < 0.0 ? -1.0 : 1.0) * 0.5 * kPi;
  Point const u_ell = unit_direction(d_ell);
  frame.line_ell = Ray{frame.Z, Angle(d_ell)};

  Point const uq = unit_direction(good.ray_q.direction);
  Point const ur = unit_direction(good.ray_r.direction);
  frame.A = line_point_intersection(good.apex_O, uq, frame.Z, u_ell);
  frame.B = line_point_intersection(good.apex_O, ur, frame.Z, u_ell);

  // Triangles AXX' and BYY' have opening alpha at X and Y; the base
  // angles of triangle OAB are beta = (pi - alpha) / 2.
  double const beta = 0.5 * (kPi - alpha);
  double const ratio = std::sin(alpha) / std::sin(beta);
  frame.X_prime = frame.A + distance(frame.A, good.contact_X) * ratio * u_ell;
  frame.Y_prime = frame.B + distance(frame.B, good.contact_Y) * ratio * (-1.0 * u_ell);
  return frame;
}

CaseTag classify_case(BaselineFrame const & frame, Tolerance const & tol)
{
  Wedge const at_X = wedge_from_points(frame.A, frame.good.contact_X, frame.X_prime);
  Wedge const at_Y = wedge_from_points(frame.B, frame.good.contact_Y, frame.Y_prime);
  bool const in_X = wedge_contains(at_X, frame.Z, tol);
  bool const in_Y = wedge_contains(at_Y, frame.Z, tol);
  if (in_X && in_Y) return CaseTag::case1;
  if (!in_X) return CaseTag::case2;
  return CaseTag::case2_mirrored;
}

AnchorWedges anchor_wedges(BaselineFrame const & frame, CaseTag tag, Tolerance const & tol)
{
  double const alpha = frame.alpha;
  double const half = 0.5 * alpha;
  double const beta = 0.5 * (kPi - alpha);
  double const ratio = std::sin(alpha) / std::sin(beta);
  Point const O = frame.good.apex_O;
  Point const X = frame.good.contact_X;
  Point const Y = frame.good.contact_Y;
  Point const Z = frame.Z;

  AnchorWedges out;
  out.tag = tag;
  out.X = X;
  out.Y = Y;
  out.Z = Z;

  switch (tag)
  {
  case CaseTag::case1:
    out.W_X = Wedge{X, mid_direction(X, frame.A, frame.X_prime), half};
    out.W_Y = Wedge{Y, mid_direction(Y, frame.B, frame.Y_prime), half};
    out.W_Z = Wedge{Z, mid_direction(Z, X, Y), half};
    break;
  case CaseTag::case2:
  {
    // Z escaped past X': cover it from X along the XX' boundary and
    // hand the A-corner to Z via the wedge angle(A, Z, Z').
    Point const z_prime = frame.A + distance(frame.A, Z) * ratio *
                              (1.0 / distance(O, frame.A)) * (O - frame.A);
    out.Z_prime = z_prime;
    out.W_Y = anchored_wedge(Y, direction_angle(O - Y), X, alpha);
    out.W_X = anchored_wedge(X, direction_angle(frame.X_prime - X), Y, alpha);
    out.W_Z = Wedge{Z, mid_direction(Z, frame.A, z_prime), half};
    break;
  }
  case CaseTag::case2_mirrored:
  {
    Point const z_prime = frame.B + distance(frame.B, Z) * ratio *
                              (1.0 / distance(O, frame.B)) * (O - frame.B);
    out.Z_prime = z_prime;
    out.W_X = anchored_wedge(X, direction_angle(O - X), Y, alpha);
    out.W_Y = anchored_wedge(Y, direction_angle(frame.Y_prime - Y), X, alpha);
    out.W_Z = Wedge{Z, mid_direction(Z, frame.B, z_prime), half};
    break;
  }
  }

  // The anchor 2-path must be mutual: middle wedge holds both ends and
  // vice versa.  Construction guarantees this; fail loudly otherwise.
  auto mutual = [&](Wedge const & wa, Point pa, Wedge const & wb, Point pb) {
    return wedge_contains(wa, pb, tol) && wedge_contains(wb, pa, tol);
  };
  bool ok = false;
  switch (tag)
  {
  case CaseTag::case1:
    ok = mutual(out.W_Z, Z, out.W_X, X) && mutual(out.W_Z, Z, out.W_Y, Y);
    break;
  case CaseTag::case2:
    ok = mutual(out.W_X, X, out.W_Y, Y) && mutual(out.W_X, X, out.W_Z, Z);
    break;
  case CaseTag::case2_mirrored:
    ok = mutual(out.W_Y, Y, out.W_X, X) && mutual(out.W_Y, Y, out.W_Z, Z);
    break;
  }
  if (!ok)
    throw InternalError("anchor wedges do not induce the expected 2-path");
  return out;
}

Wedge attach_point(Point d, AnchorWedges const & anchors, Tolerance const & tol)
{
  double const half = anchors.W_X.half_angle;
  if (wedge_contains(anchors.W_X, d, tol))
    return Wedge{d, Angle(direction_angle(anchors.X - d)), half};
  if (wedge_contains(anchors.W_Y, d, tol))
    return Wedge{d, Angle(direction_angle(anchors.Y - d)), half};
  if (wedge_contains(anchors.W_Z, d, tol))
    return Wedge{d, Angle(direction_angle(anchors.Z - d)), half};
  throw CoverageViolation("point (" + std::to_string(d.x) + ", " + std::to_string(d.y) +
                          ") lies in no anchor wedge");
}

namespace
{
// Fallback when the supporting vertex coincides with a contact: that
// corner of the tangent triangle sees the entire hull inside a wedge
// of opening (pi - alpha) / 2 <= alpha, so two anchors suffice.
Assignment solve_collapsed(std::span<Point const> points, ConvexPolygon const & hull,
                           GoodPair const & good, double alpha, Tolerance const & tol)
{
  PairFrame const pf = pair_frame(good);
  int const z_hull = supporting_vertex(hull, pf.u);
  bool const corner_is_x = (z_hull == good.hull_index_X);

  double const d_ell = double(pf.bisector) + (pf.turn < 0.0 ? -1.0 : 1.0) * 0.5 * kPi;
  Point const u_ell = unit_direction(d_ell);
  Point const O = good.apex_O;
  Point const corner = corner_is_x ? good.contact_X : good.contact_Y;
  Point const other = corner_is_x ? good.contact_Y : good.contact_X;
  Point const u_other = unit_direction(corner_is_x ? good.ray_r.direction
                                                   : good.ray_q.direction);

  // Far end of ell on the other contact's ray; the hull sits inside
  // the corner angle(O, corner, far).
  Point const far = line_point_intersection(O, u_other, corner, u_ell);
  double const half = 0.5 * alpha;
  Wedge const w_corner{corner, mid_direction(corner, O, far), half};
  Wedge const w_other{other, Angle(direction_angle(corner - other)), half};

  AnchorWedges anchors;
  anchors.tag = CaseTag::case1;
  if (corner_is_x)
  {
    anchors.W_X = w_corner;
    anchors.W_Y = w_other;
  }
  else
  {
    anchors.W_X = w_other;
    anchors.W_Y = w_corner;
  }
  anchors.W_Z = w_corner;
  anchors.X = good.contact_X;
  anchors.Y = good.contact_Y;
  anchors.Z = corner;

  Assignment out;
  out.alpha = alpha;
  out.case_tag = CaseTag::case1;
  out.apex_O = O;
  out.x_index = hull.source_indices[good.hull_index_X];
  out.y_index = hull.source_indices[good.hull_index_Y];
  out.z_index = corner_is_x ? out.x_index : out.y_index;
  out.wedges.resize(points.size());
  out.wedges[out.x_index] = anchors.W_X;
  out.wedges[out.y_index] = anchors.W_Y;
  for (int i = 0; i < int(points.size()); ++i)
  {
    if (i == out.x_index || i == out.y_index) continue;
    out.wedges[i] = attach_point(points[i], anchors, tol);
  }
  return out;
}
}  // namespace

Assignment solve(std::span<Point const> points, double alpha, SolveOptions const & options)
{
  require_alpha(alpha);
  if (alpha < kPi / 3.0 && !options.force_small_alpha)
    throw InvalidInput("opening below pi/3 carries no connectivity guarantee; "
                       "pass force to try anyway");
  int const n = int(points.size());
  if (n == 0) throw TooFewPoints("no input points");

  Assignment out;
  out.alpha = alpha;
  double const half = 0.5 * alpha;

  if (n == 1)
  {
    out.wedges = {Wedge{points[0], Angle(0.0), half}};
    out.x_index = out.z_index = out.y_index = 0;
    out.apex_O = points[0];
    return out;
  }
  if (n == 2)
  {
    if (points[0] == points[1])
      throw GeneralPositionViolation("duplicate input point", {0, 1});
    out.wedges = {Wedge{points[0], Angle(direction_angle(points[1] - points[0])), half},
                  Wedge{points[1], Angle(direction_angle(points[0] - points[1])), half}};
    out.x_index = out.z_index = 0;
    out.y_index = 1;
    out.apex_O = 0.5 * (points[0] + points[1]);
    return out;
  }

  ConvexPolygon const hull = convex_hull(points);
  GoodPair const good = find_good_pair(hull, alpha, options.tol);

  BaselineFrame frame;
  try
  {
    frame = baseline(good, hull, alpha);
  }
  catch (DegenerateBaseline const &)
  {
    return solve_collapsed(points, hull, good, alpha, options.tol);
  }

  CaseTag const tag = classify_case(frame, options.tol);
  AnchorWedges const anchors = anchor_wedges(frame, tag, options.tol);

  out.case_tag = tag;
  out.apex_O = good.apex_O;
  out.x_index = hull.source_indices[good.hull_index_X];
  out.y_index = hull.source_indices[good.hull_index_Y];
  out.z_index = frame.Z_index;
  out.wedges.resize(points.size());
  out.wedges[out.x_index] = anchors.W_X;
  out.wedges[out.y_index] = anchors.W_Y;
  out.wedges[out.z_index] = anchors.W_Z;
  for (int i = 0; i < n; ++i)
  {
    if (i == out.x_index || i == out.y_index || i == out.z_index) continue;
    out.wedges[i] = attach_point(points[i], anchors, options.tol);
  }
  return out;
}
}  // namespace wedge
