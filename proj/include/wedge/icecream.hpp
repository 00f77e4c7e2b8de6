#pragma once

#include "wedge/shapes.hpp"

namespace wedge
{
// An apex O with two rays touching the shape at single points X and Y
// at equal distances |OX| = |OY|, the shape inside the closed wedge.
struct GoodPair
{
  Point apex_O;
  Point contact_X;
  Point contact_Y;
  int hull_index_X = -1;  // polygon case only
  int hull_index_Y = -1;
  Ray ray_q;  // through X
  Ray ray_r;  // through Y
};

// Supporting-wedge data at one orientation theta: the apex of the two
// supporting lines and the contact segment on each (single contact
// collapses near == far).  Distances follow the convention
// g = |apex - near_X| and f = |apex - near_Y|.
struct TangencyProfile
{
  Angle theta;
  Point apex;
  Point near_X, far_X;  // on ray q, ordered |apex - near_X| <= |apex - far_X|
  Point near_Y, far_Y;  // on ray r
  double f = 0.0;
  double g = 0.0;
};

struct IdentityReport
{
  double integral_f = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  int grid_size = 0;
};

// Supporting wedge of opening alpha at orientation theta: ray q's
// supporting line has outward normal at angle theta, ray r's at angle
// theta - (pi - alpha).  The apex is the intersection of the two lines.
TangencyProfile tangency_profile(SupportableShape const & shape, Angle theta, double alpha);

// Area of conv({apex} u shape) minus the shape's own area at the given
// orientation; the quantity the area-maximization solver sweeps.
double added_area(SupportableShape const & shape, Angle theta, double alpha);

// Fast good-pair search over a hull: for every hull edge, candidate
// supporting lines at angle alpha to the edge line yield at most four
// opposite contacts via supporting_vertex; each candidate pair gets the
// constant-time neighbor check.  First validated pair in edge order
// wins.  Throws InternalError when no pair validates.
GoodPair find_good_pair(ConvexPolygon const & hull, double alpha = kPi / 3.0,
                        Tolerance const & tol = {});

// General solver for any supportable shape: sweeps the orientation,
// maximizes the added area (coarse 4096-point scan, golden-section
// refinement to 1e-10 rad, equal-distance polish), and validates the
// equal-distance and single-contact conditions at the maximizer.
// Throws ConvergenceFailure when the refined maximizer still violates
// them.  For a disk every orientation is optimal; theta = 0 is returned.
GoodPair ice_cream_point(SupportableShape const & shape, double alpha,
                         Tolerance const & tol = {});

// Number of sign changes of f(theta) - g(theta) around a theta grid.
// At least 2 for strictly convex shapes; the everywhere-equal case
// (disk) reports grid by convention.
int count_equal_distance_orientations(SupportableShape const & shape, double alpha, int grid);

// Simpson check of the closed-form sweep identity
// integral of f over [0, 2pi) == P(S) * (1 + cos alpha) / sin alpha.
IdentityReport perimeter_identity_residual(SupportableShape const & shape, double alpha,
                                           int grid);
}  // namespace wedge
