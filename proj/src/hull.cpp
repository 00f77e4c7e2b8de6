#include "wedge/hull.hpp"

#include "wedge/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wedge
{
namespace
{
bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Every input point that is not a hull vertex must be strictly inside;
// one sitting exactly on a hull edge is a boundary collinearity.  Sector
// location from vertex 0 costs O(log h) exact orientation tests per
// point.  Diagonal incidences (orientation 0 against a fan diagonal) are
// interior and fine; only incidence with a true hull edge is an error.
void check_boundary_collinearity(std::span<Point const> points, ConvexPolygon const & hull,
                                 std::vector<char> const & on_hull)
{
  int const h = hull.size();
  auto report = [&](int edge_a, int edge_b, int point_index) {
    throw GeneralPositionViolation(
        "collinear triple on the hull boundary: point " + std::to_string(point_index) +
            " lies on the hull edge between points " + std::to_string(edge_a) + " and " +
            std::to_string(edge_b),
        {edge_a, edge_b, point_index});
  };

  for (int pi = 0; pi < static_cast<int>(points.size()); ++pi)
  {
    if (on_hull[pi])
      continue;
    Point const & p = points[pi];

    if (orientation(hull.vertices[0], hull.vertices[1], p) == 0)
      report(hull.source_indices[0], hull.source_indices[1], pi);
    if (orientation(hull.vertices[h - 1], hull.vertices[0], p) == 0)
      report(hull.source_indices[h - 1], hull.source_indices[0], pi);

    int lo = 1, hi = h - 1;
    while (hi - lo > 1)
    {
      int const mid = (lo + hi) / 2;
      if (orientation(hull.vertices[0], hull.vertices[mid], p) >= 0)
        lo = mid;
      else
        hi = mid;
    }
    if (orientation(hull.vertices[lo], hull.vertices[hi], p) == 0)
      report(hull.source_indices[lo], hull.source_indices[hi], pi);
  }
}
}  // namespace

ConvexPolygon convex_hull(std::span<Point const> points)
{
  int const n = static_cast<int>(points.size());
  if (n < 3)
    throw TooFewPoints("convex_hull: need at least 3 points, got " + std::to_string(n));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(points[a], points[b]); });

  for (int i = 0; i + 1 < n; ++i)
  {
    if (points[order[i]] == points[order[i + 1]])
      throw GeneralPositionViolation("duplicate points at indices " +
                                         std::to_string(order[i]) + " and " +
                                         std::to_string(order[i + 1]),
                                     {order[i], order[i + 1]});
  }

  // Monotone chain with exact turns.  Popping on orientation <= 0 keeps
  // the hull strictly convex; collinear mid-edge points fall through to
  // the boundary check below, which names them.
  std::vector<int> chain(2 * n);
  int k = 0;
  for (int idx : order)
  {
    while (k >= 2 &&
           orientation(points[chain[k - 2]], points[chain[k - 1]], points[idx]) <= 0)
      --k;
    chain[k++] = idx;
  }
  int const lower_end = k + 1;
  for (int i = n - 2; i >= 0; --i)
  {
    int const idx = order[i];
    while (k >= lower_end &&
           orientation(points[chain[k - 2]], points[chain[k - 1]], points[idx]) <= 0)
      --k;
    chain[k++] = idx;
  }
  chain.resize(k - 1);  // last vertex repeats the first

  if (chain.size() < 3)
  {
    // All points lie on one line; name the two extremes and any witness.
    int const a = order.front(), b = order.back();
    int witness = -1;
    for (int idx : order)
      if (idx != a && idx != b)
      {
        witness = idx;
        break;
      }
    throw GeneralPositionViolation("all points are collinear (indices " + std::to_string(a) +
                                       ", " + std::to_string(witness) + ", " +
                                       std::to_string(b) + ")",
                                   {a, witness, b});
  }

  ConvexPolygon hull;
  hull.source_indices = std::move(chain);
  hull.vertices.reserve(hull.source_indices.size());
  for (int idx : hull.source_indices)
    hull.vertices.push_back(points[idx]);

  std::vector<char> on_hull(n, 0);
  for (int idx : hull.source_indices)
    on_hull[idx] = 1;
  check_boundary_collinearity(points, hull, on_hull);

  return hull;
}

namespace
{
// Sign of the projection difference proj(i) - proj(j) along dir.
inline int proj_cmp(ConvexPolygon const & poly, Point dir, int i, int j)
{
  double const d = dot(dir, poly.vertex(i) - poly.vertex(j));
  return (d > 0.0) - (d < 0.0);
}

// A vertex is extreme when the projection stops increasing there and
// strictly exceeds its predecessor; for a tie along an edge this holds
// at the edge's first endpoint only.
inline bool is_extreme(ConvexPolygon const & poly, Point dir, int i)
{
  return proj_cmp(poly, dir, i + 1, i) <= 0 && proj_cmp(poly, dir, i, i - 1) > 0;
}
}  // namespace

int supporting_vertex(ConvexPolygon const & poly, Point direction)
{
  int const n = poly.size();
  if (n <= 8)
  {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (proj_cmp(poly, direction, i, best) > 0)
        best = i;
    // A tie along the closing edge (n-1, 0) must resolve to its first
    // endpoint, which the ascending scan cannot reach.
    if (best == 0 && proj_cmp(poly, direction, n - 1, 0) == 0)
      best = n - 1;
    return best;
  }

  if (is_extreme(poly, direction, 0))
    return 0;
  int lo = 0, hi = n;
  while (lo + 1 < hi)
  {
    int const mid = (lo + hi) / 2;
    if (is_extreme(poly, direction, mid))
      return mid;
    int const ls = proj_cmp(poly, direction, lo + 1, lo);
    int const ms = proj_cmp(poly, direction, mid + 1, mid);
    if (ls > ms || (ls == ms && ls == proj_cmp(poly, direction, lo, mid)))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

int supporting_vertex(ConvexPolygon const & poly, Angle direction)
{
  return supporting_vertex(poly, unit_direction(direction));
}

PolygonStats polygon_stats(ConvexPolygon const & poly)
{
  int const n = poly.size();
  PolygonStats st;

  double area2 = 0.0;
  for (int i = 0; i < n; ++i)
  {
    Point const & a = poly.vertices[i];
    Point const & b = poly.vertex(i + 1);
    area2 += cross(a, b);
    st.perimeter += distance(a, b);
  }
  st.area = 0.5 * area2;

  // Rotating calipers: walk the antipodal vertex around once while the
  // triangle area against each edge keeps growing.
  auto edge_dist2 = [&](int i, int j) { return squared_norm(poly.vertex(j) - poly.vertex(i)); };
  double best = 0.0;
  int j = 1;
  for (int i = 0; i < n; ++i)
  {
    Point const e = poly.vertex(i + 1) - poly.vertices[i];
    while (cross(e, poly.vertex(j + 1) - poly.vertex(j)) > 0.0)
      j = poly.wrap(j + 1);
    best = std::max(best, std::max(edge_dist2(i, j), edge_dist2(poly.wrap(i + 1), j)));
  }
  st.diameter = std::sqrt(best);
  return st;
}
}  // namespace wedge
