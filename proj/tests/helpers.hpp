#pragma once

#include "wedge/geometry.hpp"
#include "wedge/hull.hpp"
#include "wedge/instances.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace testutil
{
// Strictly convex polygon with a random vertex count: sorted angles on a
// jittered circle are in convex position by construction, but collinear
// triples can still slip in at tiny angular gaps, so the result goes through
// convex_hull (which rejects them) with a retry loop.
inline wedge::ConvexPolygon random_hull(wedge::SplitMix64 & rng, int min_v, int max_v)
{
  for (;;)
  {
    int const n = min_v + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_v - min_v + 1));
    std::vector<double> angles(n);
    for (double & a : angles) a = rng.uniform(0.0, wedge::kTwoPi);
    std::sort(angles.begin(), angles.end());
    bool too_close = false;
    for (int i = 1; i < n; ++i)
      if (angles[i] - angles[i - 1] < 1e-3) too_close = true;
    if (angles.front() + wedge::kTwoPi - angles.back() < 1e-3) too_close = true;
    if (too_close) continue;

    std::vector<wedge::Point> pts;
    pts.reserve(n);
    for (double a : angles)
    {
      double const r = rng.uniform(0.6, 1.4);
      pts.push_back(wedge::Point{r * std::cos(a), r * std::sin(a)});
    }
    try
    {
      auto hull = wedge::convex_hull(pts);
      if (hull.size() >= std::min(3, min_v)) return hull;
    }
    catch (wedge::GeneralPositionViolation const &)
    {
      // radius jitter produced a collinear triple; resample
    }
  }
}

inline std::vector<wedge::Point> random_points(wedge::SplitMix64 & rng, int n)
{
  std::vector<wedge::Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i)
    pts.push_back(wedge::Point{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  return pts;
}
}  // namespace testutil
