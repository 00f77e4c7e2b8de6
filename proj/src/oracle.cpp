#include "wedge/oracle.hpp"

#include "wedge/errors.hpp"
#include "wedge/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace wedge::oracle
{
namespace
{
bool lex_less(Point const & a, Point const & b)
{
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}
}  // namespace

ConvexPolygon naive_hull(std::span<Point const> points)
{
  int const n = int(points.size());
  if (n < 3)
    throw TooFewPoints("hull needs at least 3 points, got " + std::to_string(n));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(points[a], points[b]); });
  for (int i = 0; i + 1 < n; ++i)
  {
    if (points[order[i]] == points[order[i + 1]])
      throw GeneralPositionViolation("duplicate input point", {order[i], order[i + 1]});
  }

  int const start = order[0];
  ConvexPolygon hull;
  int cur = start;
  for (int guard = 0; guard <= n; ++guard)
  {
    hull.vertices.push_back(points[cur]);
    hull.source_indices.push_back(cur);

    // Most clockwise candidate; among collinear winners keep the
    // farthest so the nearer ones show up as boundary violations.
    int next = cur == 0 ? 1 : 0;
    for (int c = 0; c < n; ++c)
    {
      if (c == cur || c == next) continue;
      int const o = orientation(points[cur], points[next], points[c]);
      if (o < 0)
        next = c;
      else if (o == 0 && squared_norm(points[c] - points[cur]) >
                             squared_norm(points[next] - points[cur]))
        next = c;
    }
    for (int c = 0; c < n; ++c)
    {
      if (c == cur || c == next) continue;
      if (orientation(points[cur], points[next], points[c]) == 0 &&
          dot(points[next] - points[cur], points[c] - points[cur]) > 0.0)
        throw GeneralPositionViolation("collinear triple on the hull boundary",
                                       {cur, c, next});
    }
    if (next == start) return hull;
    cur = next;
  }
  throw InternalError("gift wrapping failed to close");
}

std::vector<GoodPair> exhaustive_good_pair(ConvexPolygon const & hull, double alpha,
                                           Tolerance const & tol)
{
  int const h = hull.size();
  if (h > 200) throw InvalidInput("exhaustive good-pair search is limited to 200 vertices");
  if (!(alpha > 0.0) || !(alpha < kPi))
    throw InvalidInput("wedge opening must lie in (0, pi)");

  std::vector<GoodPair> found;
  for (int ix = 0; ix < h; ++ix)
  {
    for (int iy = 0; iy < h; ++iy)
    {
      if (ix == iy) continue;
      Point const x = hull.vertices[ix];
      Point const y = hull.vertices[iy];
      for (Point const apex : apex_candidates(x, y, alpha))
      {
        Wedge wedge;
        try
        {
          wedge = wedge_from_points(x, apex, y);
        }
        catch (DegenerateWedge const &)
        {
          continue;
        }
        bool ok = true;
        for (int v = 0; v < h && ok; ++v)
          ok = wedge_contains(wedge, hull.vertices[v], tol);
        if (!ok) continue;
        GoodPair gp;
        gp.apex_O = apex;
        gp.contact_X = x;
        gp.contact_Y = y;
        gp.hull_index_X = ix;
        gp.hull_index_Y = iy;
        gp.ray_q = Ray{apex, direction_angle(x - apex)};
        gp.ray_r = Ray{apex, direction_angle(y - apex)};
        found.push_back(gp);
      }
    }
  }
  return found;
}

namespace
{
// bit index for the unordered pair (s, t), s < t
constexpr int pair_bit(int s, int t) { return s + t * (t - 1) / 2; }

std::vector<char> connectivity_table(int n)
{
  int const pairs = n * (n - 1) / 2;
  std::vector<char> table(std::size_t(1) << pairs, 0);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask)
  {
    int parent[5];
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int t = 1; t < n; ++t)
      for (int s = 0; s < t; ++s)
        if (mask >> pair_bit(s, t) & 1) parent[find(s)] = find(t);
    int roots = 0;
    for (int i = 0; i < n; ++i) roots += find(i) == i;
    table[mask] = roots == 1;
  }
  return table;
}
}  // namespace

std::optional<std::vector<Wedge>> grid_search_assignment(std::span<Point const> points,
                                                         double alpha, int k,
                                                         Tolerance const & tol)
{
  int const n = int(points.size());
  if (n < 1 || n > 5) throw InvalidInput("grid search handles 1 to 5 points");
  if (k < 1 || k > 120) throw InvalidInput("grid search handles 1 to 120 directions");
  if (!(alpha > 0.0) || !(alpha < kPi))
    throw InvalidInput("wedge opening must lie in (0, pi)");

  double const half = 0.5 * alpha;
  std::vector<double> dirs(k);
  for (int d = 0; d < k; ++d) dirs[d] = kTwoPi * d / k;

  if (n == 1) return std::vector<Wedge>{Wedge{points[0], Angle(dirs[0]), half}};

  // captures[i][d]: bitmask of points inside wedge(points[i], dirs[d])
  std::vector<std::uint8_t> captures(std::size_t(n) * k, 0);
  std::vector<std::uint8_t> any_capture(n, 0);
  for (int i = 0; i < n; ++i)
  {
    for (int d = 0; d < k; ++d)
    {
      Wedge const w{points[i], Angle(dirs[d]), half};
      std::uint8_t bits = 0;
      for (int j = 0; j < n; ++j)
      {
        if (j == i) continue;
        if (wedge_contains(w, points[j], tol)) bits |= std::uint8_t(1) << j;
      }
      captures[std::size_t(i) * k + d] = bits;
      any_capture[i] |= bits;
    }
  }

  std::vector<char> const connected = connectivity_table(n);

  std::vector<int> choice(n, 0);
  std::vector<std::uint32_t> masks(n + 1, 0);  // edge mask after each depth
  // Lexicographic DFS over direction indices.
  auto dfs = [&](auto && self, int t) -> bool {
    if (t == n) return connected[masks[n]];
    for (int d = 0; d < k; ++d)
    {
      choice[t] = d;
      std::uint8_t const out = captures[std::size_t(t) * k + d];
      std::uint32_t mask = masks[t];
      for (int s = 0; s < t; ++s)
      {
        bool const edge = (out >> s & 1) &&
                          (captures[std::size_t(s) * k + choice[s]] >> t & 1);
        if (edge) mask |= std::uint32_t(1) << pair_bit(s, t);
      }
      // Prune: an assigned point with no edge so far and no reachable
      // future partner can never connect.
      bool dead = false;
      for (int s = 0; s <= t && !dead; ++s)
      {
        bool has_edge = false;
        for (int v = 0; v <= t && !has_edge; ++v)
        {
          if (v == s) continue;
          has_edge = mask >> pair_bit(std::min(s, v), std::max(s, v)) & 1;
        }
        if (has_edge) continue;
        bool future = false;
        for (int j = t + 1; j < n && !future; ++j)
          future = (captures[std::size_t(s) * k + choice[s]] >> j & 1) &&
                   (any_capture[j] >> s & 1);
        dead = !future;
      }
      if (dead) continue;
      masks[t + 1] = mask;
      if (self(self, t + 1)) return true;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<Wedge> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(Wedge{points[i], Angle(dirs[choice[i]]), half});
  return out;
}

double disk_reference(double radius, double alpha)
{
  return radius / std::tan(0.5 * alpha);
}
}  // namespace wedge::oracle
