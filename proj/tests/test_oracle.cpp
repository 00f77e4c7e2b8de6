#include "wedge/errors.hpp"
#include "wedge/graph.hpp"
#include "wedge/instances.hpp"
#include "wedge/oracle.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace wedge;

TEST_CASE("naive_hull mirrors convex_hull on basics and degeneracies")
{
  std::vector<Point> const pts{{1, 1}, {0, 0}, {1, 0}, {0.5, 0.5}, {0, 1}};
  ConvexPolygon const h = oracle::naive_hull(pts);
  CHECK(h.vertices == convex_hull(pts).vertices);
  CHECK(h.source_indices == convex_hull(pts).source_indices);

  std::vector<Point> const dup{{0, 0}, {1, 0}, {0.5, 1}, {1, 0}};
  CHECK_THROWS_AS(oracle::naive_hull(dup), GeneralPositionViolation);
  std::vector<Point> const edge{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0}};
  CHECK_THROWS_AS(oracle::naive_hull(edge), GeneralPositionViolation);
  std::vector<Point> const two{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(oracle::naive_hull(two), TooFewPoints);
  std::vector<Point> const line{{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_AS(oracle::naive_hull(line), GeneralPositionViolation);
  // interior collinearity is fine
  std::vector<Point> const inner{{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                 {0.2, 0.5}, {0.5, 0.5}, {0.8, 0.5}};
  CHECK(oracle::naive_hull(inner).size() == 4);
}

TEST_CASE("exhaustive_good_pair finds the equilateral symmetry pairs")
{
  std::vector<Point> const tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  ConvexPolygon const hull = convex_hull(tri);
  auto const pairs = oracle::exhaustive_good_pair(hull);
  CHECK(pairs.size() >= 3);
  for (GoodPair const & gp : pairs)
  {
    CHECK(distance(gp.apex_O, gp.contact_X) ==
          doctest::Approx(distance(gp.apex_O, gp.contact_Y)));
    Wedge const w = wedge_from_points(gp.contact_X, gp.apex_O, gp.contact_Y);
    for (Point const & v : hull.vertices) CHECK(wedge_contains(w, v));
  }
}

TEST_CASE("exhaustive_good_pair on the regular 60-gon is symmetric")
{
  auto const pts = generate("circle-evenly", 60, 0);
  ConvexPolygon const hull = convex_hull(pts);
  auto const pairs = oracle::exhaustive_good_pair(hull);
  CHECK(!pairs.empty());
  double worst = 0.0;
  for (GoodPair const & gp : pairs)
    worst = std::max(worst, std::fabs(distance(gp.apex_O, gp.contact_X) -
                                      distance(gp.apex_O, gp.contact_Y)));
  CHECK(worst <= 1e-9);
}

TEST_CASE("find_good_pair lands on a member of the exhaustive list")
{
  SplitMix64 rng(61);
  for (int trial = 0; trial < 50; ++trial)
  {
    ConvexPolygon const hull = testutil::random_hull(rng, 3, 30);
    double const diam = polygon_stats(hull).diameter;
    GoodPair const fast = find_good_pair(hull);
    auto const all = oracle::exhaustive_good_pair(hull);
    REQUIRE(!all.empty());
    double best = 1e300;
    for (GoodPair const & gp : all)
      best = std::min(best, distance(gp.apex_O, fast.apex_O));
    CHECK(best <= 1e-9 * diam);
  }
}

TEST_CASE("grid search connects two points immediately")
{
  std::vector<Point> const pts{{0, 0}, {1, 0}};
  auto const found = oracle::grid_search_assignment(pts, kPi / 3, 8);
  REQUIRE(found.has_value());
  REQUIRE(found->size() == 2);
  CHECK(wedge_contains((*found)[0], pts[1]));
  CHECK(wedge_contains((*found)[1], pts[0]));
}

TEST_CASE("grid search finds a connected triangle assignment")
{
  std::vector<Point> const pts{{0, 0}, {1, 0}, {0.4, 0.8}};
  auto const found = oracle::grid_search_assignment(pts, kPi / 3, 12);
  REQUIRE(found.has_value());
  Assignment asg;
  asg.alpha = kPi / 3;
  asg.wedges = *found;
  asg.x_index = 0;
  asg.z_index = 1;
  asg.y_index = 2;
  WedgeGraphReport const rep = check(build_graph(pts, asg), asg);
  CHECK(rep.connected);
}

TEST_CASE("grid search certifies the tight instance both ways")
{
  auto const pts = generate("triangle-plus-edge", 4, 0);
  // a slightly smaller opening leaves no connected assignment on a
  // coarse grid
  CHECK(!oracle::grid_search_assignment(pts, kPi / 3 - 0.1, 24).has_value());
  // at pi/3 a witness exists
  auto const witness = oracle::grid_search_assignment(pts, kPi / 3, 60);
  REQUIRE(witness.has_value());
  Assignment asg;
  asg.alpha = kPi / 3;
  asg.wedges = *witness;
  asg.x_index = 0;
  asg.z_index = 1;
  asg.y_index = 2;
  WedgeGraphReport const rep = check(build_graph(pts, asg), asg);
  CHECK(rep.connected);
}

TEST_CASE("disk_reference cotangent values")
{
  CHECK(oracle::disk_reference(1.0, kPi / 3) == doctest::Approx(std::sqrt(3.0)));
  CHECK(oracle::disk_reference(1.0, kPi / 2) == doctest::Approx(1.0));
  CHECK(oracle::disk_reference(2.0, kPi / 3) == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(oracle::disk_reference(3.0, 2.8) == doctest::Approx(3.0 / std::tan(1.4)));
}
