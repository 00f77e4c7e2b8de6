#pragma once

#include "wedge/connector.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wedge
{
// Mutual-containment graph: vertices are the input points, an edge
// joins i and j when each point lies in the other's wedge.  For small
// n the adjacency matrix is materialized (bit-packed rows); above the
// cap edges are recomputed on the fly from the stored wedges.
class WedgeGraph
{
public:
  WedgeGraph(std::span<Point const> points, Assignment const & assignment,
             Tolerance const & tol, int matrix_cap);

  int size() const { return n_; }
  bool has_matrix() const { return !rows_.empty(); }
  long long edge_count() const { return edge_count_; }
  bool adjacent(int i, int j) const;
  // Row view for word-parallel BFS; valid only when has_matrix().
  std::span<std::uint64_t const> row(int i) const;
  int words_per_row() const { return words_; }

private:
  struct Prepared
  {
    double ax, ay;    // apex
    double lox, loy;  // low boundary direction
    double hix, hiy;  // high boundary direction
  };
  bool contains(int i, double px, double py) const;

  int n_ = 0;
  int words_ = 0;
  double slack_sq_ = 0.0;
  std::vector<Prepared> wedges_;
  std::vector<double> xs_, ys_;
  std::vector<std::uint64_t> rows_;
  long long edge_count_ = 0;
};

struct WedgeGraphReport
{
  bool connected = false;
  int diameter = -1;        // -1 encodes infinity (disconnected)
  bool diameter_exact = false;  // false: value is the structural bound
  bool anchor_path_ok = false;
  bool all_attached = false;
  long long edge_count = 0;
};

WedgeGraph build_graph(std::span<Point const> points, Assignment const & assignment,
                       Tolerance const & tol = {}, int matrix_cap = 2000);

// Connectivity, diameter (exact via all-sources BFS when the matrix is
// present, otherwise the structural bound 4 when the star checks pass),
// anchor 2-path adjacency, and attachment of every non-anchor to some
// anchor.
WedgeGraphReport check(WedgeGraph const & graph, Assignment const & assignment);

// Tightness demo for evenly spaced points on the unit circle: largest
// number of other points a single pi/3 wedge can capture, maximized
// over apexes and a uniform grid of bisector orientations.  The hub of
// any wedge-graph star is capped by this count plus the path neighbors,
// hence max degree forces ceil(n/3) + 1 here.
int third_fraction_check(int n, int bisector_grid = 3600);
}  // namespace wedge
