#include "wedge/connector.hpp"
#include "wedge/errors.hpp"
#include "wedge/graph.hpp"
#include "wedge/instances.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace wedge;

namespace
{
bool verified(std::span<Point const> pts, Assignment const & asg)
{
  WedgeGraphReport const rep = check(build_graph(pts, asg), asg);
  return rep.connected && rep.anchor_path_ok && rep.all_attached && rep.diameter >= 0 &&
         rep.diameter <= 4;
}
}  // namespace

TEST_CASE("solve on the equilateral triangle uses the vertices as anchors")
{
  std::vector<Point> const pts{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  Assignment const asg = solve(pts);
  REQUIRE(asg.wedges.size() == 3);
  CHECK(asg.alpha == kPi / 3);
  // anchors are a permutation of all three points
  CHECK(asg.x_index != asg.y_index);
  CHECK(asg.x_index != asg.z_index);
  CHECK(asg.y_index != asg.z_index);
  for (Wedge const & w : asg.wedges) CHECK(w.half_angle == kPi / 6);
  CHECK(verified(pts, asg));
}

TEST_CASE("solve handles one and two points without a hull")
{
  std::vector<Point> const one{{2, 3}};
  Assignment const a1 = solve(one);
  REQUIRE(a1.wedges.size() == 1);
  CHECK(a1.x_index == 0);
  CHECK(a1.z_index == 0);
  CHECK(a1.y_index == 0);
  CHECK(verified(one, a1));

  std::vector<Point> const two{{0, 0}, {3, 4}};
  Assignment const a2 = solve(two);
  REQUIRE(a2.wedges.size() == 2);
  CHECK(double(a2.wedges[0].bisector) == double(direction_angle(Point{3, 4})));
  CHECK(double(a2.wedges[1].bisector) == double(direction_angle(Point{-3, -4})));
  CHECK(verified(two, a2));
  WedgeGraphReport const rep = check(build_graph(two, a2), a2);
  CHECK(rep.diameter == 1);
  CHECK(rep.edge_count == 1);
}

TEST_CASE("solve rejects empty input, duplicates, and boundary collinearity")
{
  CHECK_THROWS_AS(solve(std::vector<Point>{}), TooFewPoints);
  std::vector<Point> const dup{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(solve(dup), GeneralPositionViolation);
  auto const tpe = generate("triangle-plus-edge", 4, 0);
  CHECK_THROWS_AS(solve(tpe), GeneralPositionViolation);
}

TEST_CASE("solve refuses small openings unless forced")
{
  auto const pts = generate("uniform-disk", 12, 5);
  CHECK_THROWS_AS(solve(pts, kPi / 3 - 0.05), InvalidInput);
  SolveOptions opt;
  opt.force_small_alpha = true;
  try
  {
    Assignment const asg = solve(pts, kPi / 3 - 0.05, opt);
    for (Wedge const & w : asg.wedges)
      CHECK(w.half_angle == (kPi / 3 - 0.05) / 2);
  }
  catch (CoverageViolation const &)
  {
    // below pi/3 the anchor wedges may legitimately fail to cover
  }
  catch (InternalError const &)
  {
    // ... or fail the anchor adjacency postcondition
  }
}

TEST_CASE("baseline frame geometry on random instances")
{
  SplitMix64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial)
  {
    ConvexPolygon const hull = testutil::random_hull(rng, 4, 30);
    GoodPair const gp = find_good_pair(hull);
    BaselineFrame fr;
    try
    {
      fr = baseline(gp, hull);
    }
    catch (DegenerateBaseline const &)
    {
      continue;
    }
    ++checked;
    double const diam = polygon_stats(hull).diameter;
    double const eps = 1e-9 * diam;
    Point const ell = unit_direction(fr.line_ell.direction);

    // ell passes through Z, A, B, X', Y'; direction runs from A to B
    CHECK(fr.line_ell.origin == fr.Z);
    CHECK(std::fabs(cross(ell, fr.A - fr.Z)) <= eps);
    CHECK(std::fabs(cross(ell, fr.B - fr.Z)) <= eps);
    CHECK(std::fabs(cross(ell, fr.X_prime - fr.Z)) <= eps);
    CHECK(std::fabs(cross(ell, fr.Y_prime - fr.Z)) <= eps);
    CHECK(dot(ell, fr.B - fr.A) > 0.0);

    // ell is perpendicular to the wedge bisector at Z
    Point const ux = unit_direction(direction_angle(gp.contact_X - gp.apex_O));
    Point const uy = unit_direction(direction_angle(gp.contact_Y - gp.apex_O));
    Point const bis = ux + uy;
    CHECK(std::fabs(dot(ell, bis)) / norm(bis) <= 1e-7);

    // A on ray q, B on ray r, Z between them
    CHECK(std::fabs(cross(fr.A - gp.apex_O, ux)) <= eps);
    CHECK(std::fabs(cross(fr.B - gp.apex_O, uy)) <= eps);
    CHECK(dot(fr.Z - fr.A, fr.B - fr.Z) >= -eps);

    // the auxiliary points scale |AX| and |BY| by sin(alpha)/sin(beta)
    double const beta = (kPi - fr.alpha) / 2;
    double const ratio = std::sin(fr.alpha) / std::sin(beta);
    CHECK(distance(fr.A, fr.X_prime) ==
          doctest::Approx(ratio * distance(fr.A, gp.contact_X)));
    CHECK(distance(fr.B, fr.Y_prime) ==
          doctest::Approx(ratio * distance(fr.B, gp.contact_Y)));

    // Z is the hull's supporting vertex named by both indices
    CHECK(hull.vertices[fr.Z_hull_index] == fr.Z);
    CHECK(hull.source_indices[fr.Z_hull_index] == fr.Z_index);
  }
  CHECK(checked >= 30);  // the frame must form for the vast majority
}

TEST_CASE("anchor wedges sit on the anchor points with half angle alpha/2")
{
  SplitMix64 rng(42);
  for (int trial = 0; trial < 30; ++trial)
  {
    ConvexPolygon const hull = testutil::random_hull(rng, 4, 30);
    GoodPair const gp = find_good_pair(hull);
    BaselineFrame fr;
    try
    {
      fr = baseline(gp, hull);
    }
    catch (DegenerateBaseline const &)
    {
      continue;
    }
    CaseTag const tag = classify_case(fr);
    AnchorWedges const aw = anchor_wedges(fr, tag);
    CHECK(aw.tag == tag);
    CHECK(aw.W_X.apex == aw.X);
    CHECK(aw.W_Y.apex == aw.Y);
    CHECK(aw.W_Z.apex == aw.Z);
    CHECK(aw.W_X.half_angle == fr.alpha / 2);
    CHECK(aw.W_Y.half_angle == fr.alpha / 2);
    CHECK(aw.W_Z.half_angle == fr.alpha / 2);
    CHECK(aw.X == gp.contact_X);
    CHECK(aw.Y == gp.contact_Y);
    CHECK(aw.Z == fr.Z);
    if (tag == CaseTag::case1)
      CHECK(!aw.Z_prime.has_value());
    else
      CHECK(aw.Z_prime.has_value());
  }
}

TEST_CASE("attached wedges aim exactly at an anchor")
{
  auto const pts = generate("uniform-square", 60, 17);
  Assignment const asg = solve(pts);
  std::array<Point, 3> const anchors{pts[asg.x_index], pts[asg.y_index], pts[asg.z_index]};
  for (int i = 0; i < 60; ++i)
  {
    if (i == asg.x_index || i == asg.y_index || i == asg.z_index) continue;
    bool aimed = false;
    for (Point const & a : anchors)
      if (double(asg.wedges[i].bisector) == double(direction_angle(a - pts[i])))
        aimed = true;
    CHECK(aimed);
  }
}

TEST_CASE("a flat triangle under the chord forces the two-anchor fallback")
{
  // X and Y are adjacent hull vertices and the third point sits between
  // their chord and the apex, so the supporting vertex opposite the
  // apex is a contact itself.
  std::vector<Point> const pts{{-1, 1}, {1, 1}, {0, 0.5}};
  ConvexPolygon const hull = convex_hull(pts);

  GoodPair gp;
  gp.contact_X = Point{-1, 1};
  gp.contact_Y = Point{1, 1};
  gp.hull_index_X = 0;
  gp.hull_index_Y = 2;
  gp.apex_O = apex_candidates(gp.contact_X, gp.contact_Y, kPi / 3)[1];  // below the chord
  CHECK(gp.apex_O.y < 0.5);
  gp.ray_q = Ray{gp.apex_O, direction_angle(gp.contact_X - gp.apex_O)};
  gp.ray_r = Ray{gp.apex_O, direction_angle(gp.contact_Y - gp.apex_O)};
  CHECK_THROWS_AS(baseline(gp, hull), DegenerateBaseline);

  // the full pipeline must still deliver a verified assignment
  Assignment const asg = solve(pts);
  CHECK(verified(pts, asg));
}

TEST_CASE("solve verifies across sizes, seeds, and openings")
{
  SplitMix64 rng(44);
  for (int trial = 0; trial < 30; ++trial)
  {
    int const n = 3 + static_cast<int>(rng.next() % 60);
    auto const pts = generate(trial % 2 ? "uniform-disk" : "uniform-square", n, rng.next());
    for (double alpha : {kPi / 3, kPi / 2, 2.2})
    {
      Assignment const asg = solve(pts, alpha);
      REQUIRE(asg.wedges.size() == pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(asg.wedges[i].apex == pts[i]);
      CHECK(verified(pts, asg));
    }
  }
}

TEST_CASE("solve is deterministic")
{
  auto const pts = generate("uniform-disk", 200, 99);
  Assignment const a = solve(pts);
  Assignment const b = solve(pts);
  REQUIRE(a.wedges.size() == b.wedges.size());
  CHECK(a.x_index == b.x_index);
  CHECK(a.z_index == b.z_index);
  CHECK(a.y_index == b.y_index);
  CHECK(a.case_tag == b.case_tag);
  for (std::size_t i = 0; i < a.wedges.size(); ++i)
  {
    CHECK(double(a.wedges[i].bisector) == double(b.wedges[i].bisector));
    CHECK(a.wedges[i].half_angle == b.wedges[i].half_angle);
  }
}

TEST_CASE("solve survives rigid motions of the instance")
{
  SplitMix64 rng(45);
  auto const pts = generate("uniform-disk", 40, 7);
  for (int trial = 0; trial < 10; ++trial)
  {
    double const rot = rng.uniform(0.0, kTwoPi);
    Point const shift{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    std::vector<Point> moved;
    for (Point const & p : pts) moved.push_back(shift + rotated(p, rot));
    Assignment const asg = solve(moved);
    CHECK(verified(moved, asg));
  }
}

TEST_CASE("solve scales bit-exactly under powers of two")
{
  auto const pts = generate("uniform-square", 50, 3);
  std::vector<Point> scaled;
  for (Point const & p : pts) scaled.push_back(4.0 * p);
  Assignment const a = solve(pts);
  Assignment const b = solve(scaled);
  CHECK(a.x_index == b.x_index);
  CHECK(a.z_index == b.z_index);
  CHECK(a.y_index == b.y_index);
  CHECK(a.case_tag == b.case_tag);
  for (std::size_t i = 0; i < a.wedges.size(); ++i)
    CHECK(double(a.wedges[i].bisector) == double(b.wedges[i].bisector));
}

TEST_CASE("anchor path endpoints follow the case tag")
{
  SplitMix64 rng(46);
  for (int trial = 0; trial < 20; ++trial)
  {
    auto const pts = generate("uniform-disk", 25, rng.next());
    Assignment const asg = solve(pts);
    auto const path = asg.anchor_path();
    switch (asg.case_tag)
    {
    case CaseTag::case1:
      CHECK(path.mid == asg.z_index);
      break;
    case CaseTag::case2:
      CHECK(path.mid == asg.x_index);
      break;
    case CaseTag::case2_mirrored:
      CHECK(path.mid == asg.y_index);
      break;
    }
    CHECK(verified(pts, asg));
  }
}
