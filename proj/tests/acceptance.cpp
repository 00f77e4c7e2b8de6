// Acceptance sweep: one line per criterion, PASS or FAIL, exit code is
// the number of failures.  Tolerances are pinned here on purpose; they
// are part of what this binary asserts.
#include "wedge/connector.hpp"
#include "wedge/errors.hpp"
#include "wedge/graph.hpp"
#include "wedge/icecream.hpp"
#include "wedge/instances.hpp"
#include "wedge/io.hpp"
#include "wedge/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace wedge;
using Clock = std::chrono::steady_clock;

namespace
{
struct Result
{
  bool pass = false;
  std::string detail;
};

double elapsed_s(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(char const * pattern, auto... args)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Criteria 1 and 2 share one sweep: 200 seeds per size, even seeds from
// the unit square, odd seeds from the unit disk.
void end_to_end(Result & c1, Result & c2)
{
  auto const t0 = Clock::now();
  int const sizes[4] = {10, 100, 1000, 10000};
  int ok = 0, total = 0;
  long long half_angle_violations = 0;
  std::string first_failure;

  for (int n : sizes)
  {
    for (int seed = 0; seed < 200; ++seed)
    {
      ++total;
      auto const pts =
          generate(seed % 2 ? "uniform-disk" : "uniform-square", n, seed);
      Assignment asg;
      try
      {
        asg = solve(pts);
      }
      catch (Error const & e)
      {
        if (first_failure.empty())
          first_failure = fmt(" first failure: n=%d seed=%d (%s)", n, seed, e.what());
        continue;
      }
      for (Wedge const & w : asg.wedges)
        if (w.half_angle != kPi / 6.0) ++half_angle_violations;
      WedgeGraphReport const rep = check(build_graph(pts, asg), asg);
      bool const good = rep.connected && rep.anchor_path_ok && rep.all_attached &&
                        rep.diameter >= 0 && rep.diameter <= 4 &&
                        (n <= 2000 ? rep.diameter_exact : true);
      if (good)
        ++ok;
      else if (first_failure.empty())
        first_failure = fmt(" first failure: n=%d seed=%d", n, seed);
    }
  }
  c1.pass = ok == total;
  c1.detail = fmt("%d/%d instances verified connected with diameter <= 4 (%.1f s)%s", ok,
                  total, elapsed_s(t0), first_failure.c_str());

  bool const arithmetic_exact = (kPi / 3.0) / 2.0 == kPi / 6.0;
  c2.pass = arithmetic_exact && half_angle_violations == 0;
  c2.detail = fmt("%lld of the emitted half angles deviated from pi/6 bit-exactly",
                  half_angle_violations);
}

ConvexPolygon random_hull(SplitMix64 & rng, int max_vertices)
{
  for (;;)
  {
    int const n =
        3 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_vertices - 2));
    std::vector<double> angles(n);
    for (double & a : angles) a = rng.uniform(0.0, kTwoPi);
    std::sort(angles.begin(), angles.end());
    bool retry = false;
    for (int i = 1; i < n; ++i)
      if (angles[i] - angles[i - 1] < 1e-3) retry = true;
    if (angles.front() + kTwoPi - angles.back() < 1e-3) retry = true;
    if (retry) continue;
    std::vector<Point> pts;
    for (double a : angles)
    {
      double const r = rng.uniform(0.6, 1.4);
      pts.push_back(Point{r * std::cos(a), r * std::sin(a)});
    }
    try
    {
      return convex_hull(pts);
    }
    catch (GeneralPositionViolation const &)
    {
    }
  }
}

Result good_pair_cross_validation()
{
  auto const t0 = Clock::now();
  SplitMix64 rng(1001);
  int ok = 0;
  int const trials = 500;
  for (int t = 0; t < trials; ++t)
  {
    ConvexPolygon const hull = random_hull(rng, 50);
    double const diam = polygon_stats(hull).diameter;
    GoodPair const fast = find_good_pair(hull);
    auto const all = oracle::exhaustive_good_pair(hull);
    double best = 1e300;
    for (GoodPair const & gp : all)
      best = std::min(best, distance(gp.apex_O, fast.apex_O));
    if (!all.empty() && best <= 1e-9 * diam) ++ok;
  }
  return {ok == trials,
          fmt("%d/%d fast good pairs matched an exhaustively validated apex within "
              "1e-9*diam (%.1f s)",
              ok, trials, elapsed_s(t0))};
}

// Contact certification for criterion 4: the two hull neighbors of a
// contact must lie strictly off that contact's supporting line, on the
// hull side (this is what makes the contact a single vertex).
bool neighbors_strictly_interior(ConvexPolygon const & hull, GoodPair const & gp,
                                 int contact_index, Ray const & ray, Point other_contact)
{
  Point const u = unit_direction(ray.direction);
  double const side = cross(u, other_contact - gp.apex_O);
  if (side == 0.0) return false;
  double const sgn = side > 0.0 ? 1.0 : -1.0;
  for (int d : {-1, 1})
  {
    Point const nb = hull.vertex(contact_index + d);
    if (sgn * cross(u, nb - gp.apex_O) <= 0.0) return false;
  }
  return true;
}

Result ice_cream_sweep()
{
  auto const t0 = Clock::now();
  double const alphas[5] = {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, 2.8};
  SplitMix64 rng(2002);
  int ok = 0, total = 0;
  std::string first_failure;
  for (double alpha : alphas)
  {
    for (int t = 0; t < 100; ++t)
    {
      ++total;
      ConvexPolygon const hull = random_hull(rng, 100);
      double const diam = polygon_stats(hull).diameter;
      bool good = false;
      try
      {
        GoodPair const gp = ice_cream_point(hull, alpha);
        double const dx = distance(gp.apex_O, gp.contact_X);
        double const dy = distance(gp.apex_O, gp.contact_Y);
        Wedge const w = wedge_from_points(gp.contact_X, gp.apex_O, gp.contact_Y);
        bool contained = true;
        for (Point const & v : hull.vertices)
          contained = contained && wedge_contains(w, v);
        good = std::fabs(dx - dy) <= 1e-6 * diam && contained &&
               gp.hull_index_X >= 0 && gp.hull_index_Y >= 0 &&
               neighbors_strictly_interior(hull, gp, gp.hull_index_X, gp.ray_q,
                                           gp.contact_Y) &&
               neighbors_strictly_interior(hull, gp, gp.hull_index_Y, gp.ray_r,
                                           gp.contact_X);
      }
      catch (Error const & e)
      {
        if (first_failure.empty())
          first_failure = fmt(" first failure: alpha=%.4f trial=%d (%s)", alpha, t, e.what());
      }
      if (good)
        ++ok;
      else if (first_failure.empty())
        first_failure = fmt(" first failure: alpha=%.4f trial=%d", alpha, t);
    }
  }
  return {ok == total,
          fmt("%d/%d solves hit |OX|=|OY| within 1e-6*diam with single-vertex contacts "
              "(%.1f s)%s",
              ok, total, elapsed_s(t0), first_failure.c_str())};
}

Result sweep_identity()
{
  double worst_disk = 0.0;
  for (double alpha : {kPi / 6, kPi / 3, kPi / 2})
  {
    IdentityReport const rep =
        perimeter_identity_residual(Disk{Point{0, 0}, 1.0}, alpha, 4096);
    worst_disk = std::max(worst_disk, rep.residual);
  }
  SupportableShape const ell = Ellipse{Point{0, 0}, 2.0, 1.0, Angle(0.0)};
  IdentityReport const er = perimeter_identity_residual(ell, kPi / 3, 8192);
  double const perimeter = shape_perimeter(ell);
  bool const pass =
      worst_disk <= 1e-10 && er.residual <= 1e-6 && std::fabs(perimeter - 9.68845) <= 1e-4;
  return {pass, fmt("disk residual <= %.2e (cap 1e-10), ellipse residual %.2e (cap 1e-6), "
                    "perimeter %.6f (expected 9.68845 +- 1e-4)",
                    worst_disk, er.residual, perimeter)};
}

Result equal_distance_multiplicity()
{
  std::string counts;
  bool pass = true;
  for (double ratio : {1.01, 1.5, 2.0})
  {
    SupportableShape const ell = Ellipse{Point{0, 0}, ratio, 1.0, Angle(0.0)};
    int const c = count_equal_distance_orientations(ell, kPi / 3, 4096);
    pass = pass && c >= 2;
    counts += fmt(" ratio %.2f -> %d", ratio, c);
  }
  return {pass, "equal-distance orientations per axis ratio:" + counts};
}

Result tightness()
{
  auto const t0 = Clock::now();
  auto const pts = generate("triangle-plus-edge", 4, 0);

  bool const none_below =
      !oracle::grid_search_assignment(pts, kPi / 3 - 0.1, 120).has_value();

  // The exact instance carries a boundary collinearity by design, which
  // solve rejects; the documented route is a 1e-9 jitter, after which
  // the assignment must still verify against the original points.
  bool verified_at = false;
  try
  {
    auto jittered = pts;
    perturb(jittered, 1e-9, 7);
    Assignment const asg = solve(jittered, kPi / 3);
    std::stringstream buf;
    io::write_assignment(buf, asg);
    Assignment const reattached = io::read_assignment(buf, pts);
    WedgeGraphReport const rep = check(build_graph(pts, reattached), reattached);
    verified_at = rep.connected && rep.anchor_path_ok && rep.all_attached &&
                  rep.diameter >= 0 && rep.diameter <= 4;
  }
  catch (Error const &)
  {
    verified_at = false;
  }
  return {none_below && verified_at,
          fmt("k=120 grid search below pi/3 found none: %s; solve at pi/3 verified: %s "
              "(%.1f s)",
              none_below ? "yes" : "NO", verified_at ? "yes" : "NO", elapsed_s(t0))};
}

Result third_fraction()
{
  std::string counts;
  bool pass = true;
  for (int n : {6, 12, 24, 99})
  {
    int const captured = third_fraction_check(n, 3600);
    int const cap = (n + 2) / 3 + 1;
    pass = pass && captured <= cap;
    counts += fmt(" n=%d -> %d (cap %d)", n, captured, cap);
  }
  return {pass, "max wedge capture on even circles:" + counts};
}

double median_solve_seconds(int n, int runs)
{
  std::vector<double> times;
  for (int r = 0; r < runs; ++r)
  {
    auto const pts = generate("uniform-disk", n, 7000 + r);
    auto const t0 = Clock::now();
    Assignment const asg = solve(pts);
    times.push_back(elapsed_s(t0));
    if (asg.wedges.size() != static_cast<std::size_t>(n)) return 1e9;
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

Result performance()
{
  double const t1 = median_solve_seconds(100000, 5);
  double const t2 = median_solve_seconds(200000, 5);
  double const ratio = t2 / t1;

  auto const big = generate("uniform-disk", 1000000, 7100);
  auto const t0 = Clock::now();
  Assignment const asg = solve(big);
  double const t_big = elapsed_s(t0);
  bool const sized = asg.wedges.size() == big.size();

  bool const pass = ratio <= 2.5 && t_big <= 10.0 && sized;
  return {pass, fmt("median solve: n=1e5 %.3f s, n=2e5 %.3f s (ratio %.2f, cap 2.5); "
                    "n=1e6 %.2f s (cap 10)",
                    t1, t2, ratio, t_big)};
}

Result oracle_equivalence()
{
  auto const t0 = Clock::now();
  SplitMix64 rng(3003);
  int ok = 0;
  int const trials = 1000;
  for (int t = 0; t < trials; ++t)
  {
    int const n = 3 + static_cast<int>(rng.next() % 298);
    auto const pts = generate(t % 2 ? "uniform-disk" : "uniform-square", n, rng.next());
    ConvexPolygon const fast = convex_hull(pts);
    ConvexPolygon const slow = oracle::naive_hull(pts);
    if (fast.vertices == slow.vertices && fast.source_indices == slow.source_indices) ++ok;
  }
  return {ok == trials,
          fmt("%d/%d hulls identical between the fast and gift-wrapping builds (%.1f s)",
              ok, trials, elapsed_s(t0))};
}
}  // namespace

int main()
{
  Result results[10];
  end_to_end(results[0], results[1]);
  results[2] = good_pair_cross_validation();
  results[3] = ice_cream_sweep();
  results[4] = sweep_identity();
  results[5] = equal_distance_multiplicity();
  results[6] = tightness();
  results[7] = third_fraction();
  results[8] = performance();
  results[9] = oracle_equivalence();

  int failures = 0;
  for (int i = 0; i < 10; ++i)
  {
    if (!results[i].pass) ++failures;
    std::printf("criterion %2d: %s  %s\n", i + 1, results[i].pass ? "PASS" : "FAIL",
                results[i].detail.c_str());
  }
  return failures;
}
