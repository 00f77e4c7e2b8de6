#include "wedge/icecream.hpp"

#include "wedge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace wedge
{
namespace
{
void require_opening(double alpha)
{
  if (!(alpha > 0.0) || !(alpha < kPi))
    throw InvalidInput("wedge opening angle must lie strictly between 0 and pi");
}

// Outward normals of the two supporting lines at orientation theta.
struct Normals
{
  Point q, r;
};

Normals sweep_normals(double theta, double alpha)
{
  return {unit_direction(theta), unit_direction(theta - (kPi - alpha))};
}

Point line_intersection_apex(Normals const & n, double hq, double hr)
{
  double const det = cross(n.q, n.r);  // -sin(alpha), never zero for alpha in (0, pi)
  return {(hq * n.r.y - hr * n.q.y) / det, (hr * n.q.x - hq * n.r.x) / det};
}

// Contact segment of one supporting line on a polygon: the extreme
// vertex plus an adjacent vertex lying on the same line (within an
// absolute slack), which happens when the line carries a whole edge.
struct PolyContact
{
  int a, b;  // vertex ids; a == b for single contact
};

PolyContact polygon_line_contact(ConvexPolygon const & poly, Point n, double slack_abs)
{
  int const i = supporting_vertex(poly, n);
  double const h = dot(poly.vertices[i], n);
  if (dot(poly.vertex(i + 1), n) >= h - slack_abs)
    return {i, poly.wrap(i + 1)};
  if (dot(poly.vertex(i - 1), n) >= h - slack_abs)
    return {i, poly.wrap(i - 1)};
  return {i, i};
}

// Ellipse boundary parameter of the contact point for outward normal n.
double ellipse_contact_parameter(Ellipse const & e, Point n)
{
  Point const m = rotated(n, -e.rotation.rad);
  return std::atan2(e.b * m.y, e.a * m.x);
}

struct ProfileDetail
{
  TangencyProfile profile;
  int ix_near = -1, iy_near = -1;  // polygon vertex ids of the near contacts
  bool single_x = true, single_y = true;
};

ProfileDetail profile_detail(SupportableShape const & shape, double theta, double alpha,
                             double diameter)
{
  Normals const n = sweep_normals(theta, alpha);
  Support const sq = support(shape, n.q);
  Support const sr = support(shape, n.r);
  Point const apex = line_intersection_apex(n, sq.value, sr.value);

  ProfileDetail d;
  d.profile.theta = Angle(theta);
  d.profile.apex = apex;

  if (auto const * poly = std::get_if<ConvexPolygon>(&shape))
  {
    double const slack = 1e-9 * diameter;
    auto assign = [&](Point normal, Point & near, Point & far, int & near_id, bool & single) {
      PolyContact const c = polygon_line_contact(*poly, normal, slack);
      Point const pa = poly->vertices[c.a];
      Point const pb = poly->vertices[c.b];
      bool const a_near = squared_norm(pa - apex) <= squared_norm(pb - apex);
      near = a_near ? pa : pb;
      far = a_near ? pb : pa;
      near_id = a_near ? c.a : c.b;
      single = (c.a == c.b);
    };
    assign(n.q, d.profile.near_X, d.profile.far_X, d.ix_near, d.single_x);
    assign(n.r, d.profile.near_Y, d.profile.far_Y, d.iy_near, d.single_y);
  }
  else
  {
    d.profile.near_X = d.profile.far_X = sq.contact;
    d.profile.near_Y = d.profile.far_Y = sr.contact;
  }

  d.profile.g = distance(apex, d.profile.near_X);
  d.profile.f = distance(apex, d.profile.near_Y);
  return d;
}
}  // namespace

TangencyProfile tangency_profile(SupportableShape const & shape, Angle theta, double alpha)
{
  require_opening(alpha);
  return profile_detail(shape, theta.rad, alpha, shape_diameter(shape)).profile;
}

double added_area(SupportableShape const & shape, Angle theta, double alpha)
{
  require_opening(alpha);
  Normals const n = sweep_normals(theta.rad, alpha);
  Support const sq = support(shape, n.q);
  Support const sr = support(shape, n.r);
  Point const apex = line_intersection_apex(n, sq.value, sr.value);

  if (auto const * poly = std::get_if<ConvexPolygon>(&shape))
  {
    // conv({apex} u S) \ S decomposes into the triangles the apex spans
    // with the boundary edges facing it.
    double fan2 = 0.0;
    int const h = poly->size();
    for (int i = 0; i < h; ++i)
    {
      double const c = cross(poly->vertices[i] - apex, poly->vertex(i + 1) - apex);
      if (c < 0.0)
        fan2 -= c;
    }
    return 0.5 * fan2;
  }

  // Conic case: triangle between the two apex-contact segments minus
  // the cap between the contact chord and the boundary arc facing the
  // apex.  In the frame scaling the ellipse to a unit circle the cap is
  // a circular segment of arc length Delta, hence area (Delta - sin
  // Delta) / 2, scaled back by a*b.
  double tx, ty, ab;
  if (auto const * e = std::get_if<Ellipse>(&shape))
  {
    tx = ellipse_contact_parameter(*e, n.q);
    ty = ellipse_contact_parameter(*e, n.r);
    ab = e->a * e->b;
  }
  else
  {
    auto const & disk = std::get<Disk>(shape);
    tx = std::atan2(n.q.y, n.q.x);
    ty = std::atan2(n.r.y, n.r.x);
    ab = disk.radius * disk.radius;
  }
  double const triangle = 0.5 * std::fabs(cross(sq.contact - apex, sr.contact - apex));
  double const delta = normalize_radians(tx - ty);  // arc facing the apex runs ccw from Y to X
  double const cap = 0.5 * ab * (delta - std::sin(delta));
  return triangle - cap;
}

namespace
{
GoodPair good_pair_from_contacts(Point O, Point X, Point Y, int ix, int iy)
{
  GoodPair gp;
  gp.apex_O = O;
  gp.contact_X = X;
  gp.contact_Y = Y;
  gp.hull_index_X = ix;
  gp.hull_index_Y = iy;
  gp.ray_q = {O, direction_angle(X - O)};
  gp.ray_r = {O, direction_angle(Y - O)};
  return gp;
}

// Constant-time good-pair validation: the four hull neighbors of the
// contacts must lie in the closed wedge (convexity then gives full
// containment), and each contact's neighbors must sit strictly off its
// own ray line, so the ray meets the hull in that single vertex.
bool validate_candidate(ConvexPolygon const & hull, int ix, int iy, Point O, double alpha,
                        Tolerance const & tol, double strict_eps)
{
  Point const X = hull.vertices[ix];
  Point const Y = hull.vertices[iy];
  Wedge w;
  try
  {
    w = wedge_from_points(X, O, Y);
  }
  catch (DegenerateWedge const &)
  {
    return false;
  }
  if (std::fabs(2.0 * w.half_angle - alpha) > 4.0 * tol.eps_ang)
    return false;

  int const nbs[4] = {hull.wrap(ix - 1), hull.wrap(ix + 1), hull.wrap(iy - 1),
                      hull.wrap(iy + 1)};
  for (int nb : nbs)
    if (!wedge_contains(w, hull.vertices[nb], tol))
      return false;

  auto off_ray_line = [&](Point contact, int nb) {
    Point const u = contact - O;
    double const c = cross(u, hull.vertices[nb] - O);
    return std::fabs(c) > strict_eps * norm(u);
  };
  return off_ray_line(X, hull.wrap(ix - 1)) && off_ray_line(X, hull.wrap(ix + 1)) &&
         off_ray_line(Y, hull.wrap(iy - 1)) && off_ray_line(Y, hull.wrap(iy + 1));
}
}  // namespace

GoodPair find_good_pair(ConvexPolygon const & hull, double alpha, Tolerance const & tol)
{
  require_opening(alpha);
  int const h = hull.size();
  double const diam = polygon_stats(hull).diameter;
  double const strict_eps = 1e-12 * diam;

  for (int e = 0; e < h; ++e)
  {
    Point const e0 = hull.vertices[e];
    Point const e1 = hull.vertex(e + 1);
    double const phi = std::atan2(e1.y - e0.y, e1.x - e0.x);

    // A supporting line at angle alpha to this edge's line can face one
    // of two rotations and two sides: at most four opposite contacts.
    double const psis[2] = {phi + alpha, phi - alpha};
    double const sides[2] = {0.5 * kPi, -0.5 * kPi};
    for (double psi : psis)
      for (double side : sides)
      {
        Point const normal = unit_direction(psi + side);
        int const yi = supporting_vertex(hull, normal);
        int y_candidates[2] = {yi, -1};
        if (dot(hull.vertex(yi + 1) - hull.vertices[yi], normal) == 0.0)
          y_candidates[1] = hull.wrap(yi + 1);

        for (int ycand : y_candidates)
        {
          if (ycand < 0)
            continue;
          int const x_candidates[2] = {e, hull.wrap(e + 1)};
          for (int xcand : x_candidates)
          {
            if (xcand == ycand)
              continue;
            for (Point const & O :
                 apex_candidates(hull.vertices[xcand], hull.vertices[ycand], alpha))
            {
              if (validate_candidate(hull, xcand, ycand, O, alpha, tol, strict_eps))
                return good_pair_from_contacts(O, hull.vertices[xcand],
                                               hull.vertices[ycand], xcand, ycand);
            }
          }
        }
      }
  }
  throw InternalError("find_good_pair: no candidate pair validated");
}

namespace
{
double refine_golden_section(SupportableShape const & shape, double alpha, double lo,
                             double hi, double tol_rad)
{
  double const invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = added_area(shape, Angle(c), alpha);
  double fd = added_area(shape, Angle(d), alpha);
  while (hi - lo > tol_rad)
  {
    if (fc < fd)
    {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = added_area(shape, Angle(d), alpha);
    }
    else
    {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = added_area(shape, Angle(c), alpha);
    }
  }
  return 0.5 * (lo + hi);
}

// Distance imbalance f - g; zero at the solution.
double imbalance(SupportableShape const & shape, double theta, double alpha, double diam)
{
  ProfileDetail const d = profile_detail(shape, theta, alpha, diam);
  return d.profile.f - d.profile.g;
}

std::optional<double> polish_equal_distance(SupportableShape const & shape, double alpha,
                                            double center, double window, double diam)
{
  double lo = center - window;
  double hi = center + window;
  double slo = imbalance(shape, lo, alpha, diam);
  double shi = imbalance(shape, hi, alpha, diam);
  if (slo == 0.0)
    return lo;
  if (shi == 0.0)
    return hi;
  if ((slo < 0.0) == (shi < 0.0))
    return std::nullopt;
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it)
  {
    double const mid = 0.5 * (lo + hi);
    double const sm = imbalance(shape, mid, alpha, diam);
    if (sm == 0.0)
      return mid;
    if ((sm < 0.0) == (slo < 0.0))
    {
      lo = mid;
      slo = sm;
    }
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}
}  // namespace

GoodPair ice_cream_point(SupportableShape const & shape, double alpha, Tolerance const & tol)
{
  require_opening(alpha);
  double const diam = shape_diameter(shape);

  // 1e-8 rad of angular refinement bounds |f - g| by about 1e-8 * diam;
  // a looser caller tolerance widens the acceptance, never tightens it.
  double const eq_tol = std::max(1e-8, tol.eps_len) * diam;

  double theta_hat = 0.0;
  if (!std::holds_alternative<Disk>(shape))
  {
    int const N = 4096;
    double best = -std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k < N; ++k)
    {
      double const v = added_area(shape, Angle(kTwoPi * k / N), alpha);
      if (v > best)
      {
        best = v;
        best_k = k;
      }
    }
    double const step = kTwoPi / N;
    double const center = kTwoPi * best_k / N;
    theta_hat = refine_golden_section(shape, alpha, center - step, center + step, 1e-10);
    // The area maximum can be flat enough that golden-section lands a
    // few sqrt(eps) radians off the true orientation, so the window for
    // bracketing the f = g sign change expands until a candidate passes
    // both acceptance checks.  The maximum is never at a contact-switch
    // knot, so a clean bracket exists once the window is wide enough.
    for (double window = 1e-9; window <= step; window *= 4.0)
    {
      auto const polished = polish_equal_distance(shape, alpha, theta_hat, window, diam);
      if (!polished)
        continue;
      ProfileDetail const cand = profile_detail(shape, *polished, alpha, diam);
      if (std::fabs(cand.profile.f - cand.profile.g) <= eq_tol && cand.single_x &&
          cand.single_y)
      {
        theta_hat = *polished;
        break;
      }
    }
  }

  ProfileDetail const d = profile_detail(shape, theta_hat, alpha, diam);
  TangencyProfile const & p = d.profile;
  if (std::fabs(p.f - p.g) > eq_tol)
    throw ConvergenceFailure("ice_cream_point: equal-distance condition not met after refinement");
  if (!d.single_x || !d.single_y)
    throw ConvergenceFailure("ice_cream_point: contact is an edge at the refined orientation");

  return good_pair_from_contacts(p.apex, p.near_X, p.near_Y, d.ix_near, d.iy_near);
}

int count_equal_distance_orientations(SupportableShape const & shape, double alpha, int grid)
{
  require_opening(alpha);
  if (!is_strictly_convex(shape))
    throw InvalidInput("equal-distance counting requires a strictly convex shape");
  if (grid < 360)
    throw InvalidInput("equal-distance counting requires a grid of at least 360");

  double const diam = shape_diameter(shape);
  std::vector<double> s(grid);
  double max_abs = 0.0;
  for (int k = 0; k < grid; ++k)
  {
    s[k] = imbalance(shape, kTwoPi * k / grid, alpha, diam);
    max_abs = std::max(max_abs, std::fabs(s[k]));
  }
  if (max_abs <= 1e-12 * diam)
    return grid;  // everywhere equal (disk); documented convention

  // Count sign transitions around the cycle, ignoring near-zero samples
  // so exact symmetry axes do not double-count.
  double const zero_band = 1e-14 * diam;
  int count = 0;
  int last = 0;
  int first = 0;
  for (int k = 0; k < grid; ++k)
  {
    if (std::fabs(s[k]) <= zero_band)
      continue;
    int const sign = s[k] > 0.0 ? 1 : -1;
    if (last != 0 && sign != last)
      ++count;
    if (first == 0)
      first = sign;
    last = sign;
  }
  if (last != 0 && first != 0 && last != first)
    ++count;  // wrap-around transition
  return count;
}

IdentityReport perimeter_identity_residual(SupportableShape const & shape, double alpha,
                                           int grid)
{
  require_opening(alpha);
  if (!is_strictly_convex(shape))
    throw InvalidInput("the perimeter identity requires a strictly convex shape");
  if (grid < 64)
    throw InvalidInput("identity check requires a grid of at least 64");

  int const n = grid + (grid % 2);  // composite Simpson needs an even count
  double const diam = shape_diameter(shape);
  double const h = kTwoPi / n;

  double const f0 = profile_detail(shape, 0.0, alpha, diam).profile.f;
  double sum = 2.0 * f0;  // endpoints coincide: f(0) + f(2*pi)
  for (int k = 1; k < n; ++k)
  {
    double const fk = profile_detail(shape, h * k, alpha, diam).profile.f;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * fk;
  }

  IdentityReport rep;
  rep.grid_size = n;
  rep.integral_f = h / 3.0 * sum;
  rep.rhs = shape_perimeter(shape) * (1.0 + std::cos(alpha)) / std::sin(alpha);
  rep.residual = std::fabs(rep.integral_f - rep.rhs) / rep.rhs;
  return rep;
}
}  // namespace wedge
