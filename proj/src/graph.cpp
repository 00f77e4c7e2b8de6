#include "wedge/graph.hpp"

#include "wedge/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace wedge
{
WedgeGraph::WedgeGraph(std::span<Point const> points, Assignment const & assignment,
                       Tolerance const & tol, int matrix_cap)
{
  n_ = int(points.size());
  if (int(assignment.wedges.size()) != n_)
    throw SizeMismatch("assignment has " + std::to_string(assignment.wedges.size()) +
                       " wedges for " + std::to_string(n_) + " points");
  slack_sq_ = tol.eps_ang * tol.eps_ang;

  wedges_.resize(n_);
  xs_.resize(n_);
  ys_.resize(n_);
  for (int i = 0; i < n_; ++i)
  {
    Wedge const & w = assignment.wedges[i];
    if (!(w.apex == points[i]))
      throw InvalidInput("wedge apex differs from its point at index " + std::to_string(i));
    Point const lo = unit_direction(double(w.bisector) - w.half_angle);
    Point const hi = unit_direction(double(w.bisector) + w.half_angle);
    wedges_[i] = {w.apex.x, w.apex.y, lo.x, lo.y, hi.x, hi.y};
    xs_[i] = points[i].x;
    ys_[i] = points[i].y;
  }

  bool const matrix = n_ <= matrix_cap;
  if (matrix)
  {
    words_ = (n_ + 63) / 64;
    rows_.assign(std::size_t(n_) * words_, 0);
  }
  for (int i = 0; i < n_; ++i)
  {
    for (int j = i + 1; j < n_; ++j)
    {
      if (contains(i, xs_[j], ys_[j]) && contains(j, xs_[i], ys_[i]))
      {
        ++edge_count_;
        if (matrix)
        {
          rows_[std::size_t(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
          rows_[std::size_t(j) * words_ + i / 64] |= std::uint64_t(1) << (i % 64);
        }
      }
    }
  }
}

bool WedgeGraph::contains(int i, double px, double py) const
{
  Prepared const & w = wedges_[i];
  double const vx = px - w.ax;
  double const vy = py - w.ay;
  double const v2 = vx * vx + vy * vy;
  double const c_lo = w.lox * vy - w.loy * vx;
  if (c_lo < 0.0 && c_lo * c_lo > slack_sq_ * v2) return false;
  double const c_hi = w.hix * vy - w.hiy * vx;
  if (c_hi > 0.0 && c_hi * c_hi > slack_sq_ * v2) return false;
  return true;
}

bool WedgeGraph::adjacent(int i, int j) const
{
  if (i == j) return false;
  if (has_matrix())
    return (rows_[std::size_t(i) * words_ + j / 64] >> (j % 64)) & 1;
  return contains(i, xs_[j], ys_[j]) && contains(j, xs_[i], ys_[i]);
}

std::span<std::uint64_t const> WedgeGraph::row(int i) const
{
  return {rows_.data() + std::size_t(i) * words_, std::size_t(words_)};
}

WedgeGraph build_graph(std::span<Point const> points, Assignment const & assignment,
                       Tolerance const & tol, int matrix_cap)
{
  return WedgeGraph(points, assignment, tol, matrix_cap);
}

namespace
{
struct BfsResult
{
  int eccentricity = 0;
  int visited = 0;
};

// Word-parallel BFS over bit-packed rows.
BfsResult bfs_matrix(WedgeGraph const & g, int source, std::vector<std::uint64_t> & visited,
                     std::vector<std::uint64_t> & next, std::vector<int> & frontier)
{
  int const words = g.words_per_row();
  std::fill(visited.begin(), visited.end(), 0);
  visited[source / 64] |= std::uint64_t(1) << (source % 64);
  frontier.assign(1, source);
  BfsResult res{0, 1};
  while (!frontier.empty())
  {
    std::fill(next.begin(), next.end(), 0);
    for (int v : frontier)
    {
      auto row = g.row(v);
      for (int w = 0; w < words; ++w) next[w] |= row[w];
    }
    frontier.clear();
    for (int w = 0; w < words; ++w)
    {
      std::uint64_t fresh = next[w] & ~visited[w];
      visited[w] |= fresh;
      while (fresh)
      {
        int const b = std::countr_zero(fresh);
        fresh &= fresh - 1;
        frontier.push_back(w * 64 + b);
      }
    }
    if (frontier.empty()) break;
    ++res.eccentricity;
    res.visited += int(frontier.size());
  }
  return res;
}

// BFS without a matrix: scan the shrinking unvisited pool per popped
// vertex.  Hub-heavy wedge graphs absorb most vertices in a few pops.
BfsResult bfs_streaming(WedgeGraph const & g, int source)
{
  int const n = g.size();
  std::vector<int> pool;
  pool.reserve(n - 1);
  for (int i = 0; i < n; ++i)
    if (i != source) pool.push_back(i);

  std::vector<int> frontier{source};
  std::vector<int> next;
  BfsResult res{0, 1};
  while (!frontier.empty() && !pool.empty())
  {
    next.clear();
    for (int v : frontier)
    {
      std::size_t keep = 0;
      for (std::size_t k = 0; k < pool.size(); ++k)
      {
        if (g.adjacent(v, pool[k]))
          next.push_back(pool[k]);
        else
          pool[keep++] = pool[k];
      }
      pool.resize(keep);
      if (pool.empty()) break;
    }
    if (next.empty()) break;
    ++res.eccentricity;
    res.visited += int(next.size());
    frontier.swap(next);
  }
  return res;
}
}  // namespace

WedgeGraphReport check(WedgeGraph const & graph, Assignment const & assignment)
{
  int const n = graph.size();
  if (int(assignment.wedges.size()) != n)
    throw SizeMismatch("assignment size does not match graph");
  auto valid = [&](int i) { return i >= 0 && i < n; };
  if (!valid(assignment.x_index) || !valid(assignment.y_index) || !valid(assignment.z_index))
    throw InvalidInput("anchor index out of range");

  WedgeGraphReport report;
  report.edge_count = graph.edge_count();

  Assignment::Path const path = assignment.anchor_path();
  report.anchor_path_ok = (path.a == path.mid || graph.adjacent(path.a, path.mid)) &&
                          (path.mid == path.b || graph.adjacent(path.mid, path.b));

  report.all_attached = true;
  for (int i = 0; i < n; ++i)
  {
    if (i == assignment.x_index || i == assignment.y_index || i == assignment.z_index)
      continue;
    if (!graph.adjacent(i, assignment.x_index) && !graph.adjacent(i, assignment.y_index) &&
        !graph.adjacent(i, assignment.z_index))
    {
      report.all_attached = false;
      break;
    }
  }

  if (graph.has_matrix())
  {
    int const words = graph.words_per_row();
    std::vector<std::uint64_t> visited(words), next(words);
    std::vector<int> frontier;
    BfsResult const from0 = bfs_matrix(graph, 0, visited, next, frontier);
    report.connected = from0.visited == n;
    if (!report.connected)
    {
      report.diameter = -1;
      report.diameter_exact = true;
      return report;
    }
    int diam = from0.eccentricity;
    for (int s = 1; s < n; ++s)
      diam = std::max(diam, bfs_matrix(graph, s, visited, next, frontier).eccentricity);
    report.diameter = diam;
    report.diameter_exact = true;
    return report;
  }

  BfsResult const mid = bfs_streaming(graph, path.mid);
  report.connected = mid.visited == n;
  if (!report.connected)
  {
    report.diameter = -1;
    report.diameter_exact = true;
    return report;
  }
  // Upper bound: twice any eccentricity, and 4 when the star structure
  // holds (everything is one hop from an anchor on the 2-path).
  int bound = 2 * mid.eccentricity;
  if (report.anchor_path_ok && report.all_attached) bound = std::min(bound, 4);
  report.diameter = std::max(bound, mid.eccentricity);
  report.diameter_exact = false;
  return report;
}

int third_fraction_check(int n, int bisector_grid)
{
  if (n < 2) throw InvalidInput("tightness demo needs at least two points");
  if (bisector_grid < 360) throw InvalidInput("bisector grid must be at least 360");

  std::vector<double> xs(n), ys(n);
  for (int k = 0; k < n; ++k)
  {
    double const t = kTwoPi * k / n;
    xs[k] = std::cos(t);
    ys[k] = std::sin(t);
  }

  Tolerance const tol;
  double const slack_sq = tol.eps_ang * tol.eps_ang;
  double const half = kPi / 6.0;
  int best = 0;
  for (int i = 0; i < n; ++i)
  {
    for (int g = 0; g < bisector_grid; ++g)
    {
      double const theta = kTwoPi * g / bisector_grid;
      Point const lo = unit_direction(theta - half);
      Point const hi = unit_direction(theta + half);
      int count = 0;
      for (int j = 0; j < n; ++j)
      {
        if (j == i) continue;
        double const vx = xs[j] - xs[i];
        double const vy = ys[j] - ys[i];
        double const c_lo = lo.x * vy - lo.y * vx;
        if (c_lo < 0.0 && c_lo * c_lo > slack_sq * (vx * vx + vy * vy)) continue;
        double const c_hi = hi.x * vy - hi.y * vx;
        if (c_hi > 0.0 && c_hi * c_hi > slack_sq * (vx * vx + vy * vy)) continue;
        ++count;
      }
      best = std::max(best, count);
    }
  }
  return best;
}
}  // namespace wedge
