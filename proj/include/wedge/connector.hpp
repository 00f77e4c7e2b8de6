#pragma once

#include "wedge/icecream.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wedge
{
// Frame for the anchor construction: the supporting line ell opposite
// the good-pair apex, its intersections A and B with the pair's rays,
// the supporting hull vertex Z on ell, and the two auxiliary points X'
// and Y' on ell (triangle AXX' and BYY' have opening alpha at X and Y).
struct BaselineFrame
{
  GoodPair good;
  double alpha = 0.0;
  Ray line_ell;  // point Z + direction along ell (from A toward B)
  Point A;
  Point B;
  Point Z;
  int Z_hull_index = -1;
  int Z_index = -1;  // index into the input list
  Point X_prime;
  Point Y_prime;
};

enum class CaseTag
{
  case1,
  case2,
  case2_mirrored,
};

struct AnchorWedges
{
  CaseTag tag = CaseTag::case1;
  Wedge W_X, W_Y, W_Z;
  std::optional<Point> Z_prime;  // case 2 only
  Point X, Y, Z;
};

// Complete output of the construction: one wedge per input point, the
// anchor triple, and the good-pair apex for reporting.
struct Assignment
{
  double alpha = 0.0;
  std::vector<Wedge> wedges;
  int x_index = -1, z_index = -1, y_index = -1;
  CaseTag case_tag = CaseTag::case1;
  Point apex_O;

  // The anchor 2-path as adjacency: (a, mid) and (mid, b) must be
  // edges.  The middle vertex depends on the case.
  struct Path
  {
    int a = -1, mid = -1, b = -1;
  };
  Path anchor_path() const
  {
    switch (case_tag)
    {
    case CaseTag::case2: return {y_index, x_index, z_index};
    case CaseTag::case2_mirrored: return {x_index, y_index, z_index};
    default: return {x_index, z_index, y_index};
    }
  }
};

struct SolveOptions
{
  Tolerance tol;
  bool force_small_alpha = false;  // allow alpha < pi/3 (no connectivity guarantee)
};

// Supporting line opposite O, perpendicular to the wedge bisector, plus
// the derived frame points.  Throws DegenerateBaseline when the
// supporting vertex Z coincides with a contact (solve then falls back
// to the two-anchor star construction).
BaselineFrame baseline(GoodPair const & good, ConvexPolygon const & hull,
                       double alpha = kPi / 3.0);

// Case 1 when Z lies in both wedges angle(A,X,X') and angle(B,Y,Y');
// case 2 when Z is outside the first; 2-mirrored when inside the first
// but outside the second.
CaseTag classify_case(BaselineFrame const & frame, Tolerance const & tol = {});

// The three anchor wedges for the classified case.  All half-angles
// are exactly alpha/2.  Verifies the anchor 2-path adjacency and throws
// InternalError if it fails.
AnchorWedges anchor_wedges(BaselineFrame const & frame, CaseTag tag,
                           Tolerance const & tol = {});

// Wedge for a non-anchor point: aimed at the first anchor (priority X,
// Y, Z) whose wedge contains it.  Throws CoverageViolation when none
// does.
Wedge attach_point(Point d, AnchorWedges const & anchors, Tolerance const & tol = {});

// Full pipeline: hull, good pair, baseline, classification, anchor
// wedges, attachment.  n = 1 and n = 2 bypass the hull.  Deterministic
// for identical input.
Assignment solve(std::span<Point const> points, double alpha = kPi / 3.0,
                 SolveOptions const & options = {});
}  // namespace wedge
