#pragma once

namespace wedge::predicates
{
// Sign of the cross product (b - a) x (c - a), computed with adaptive
// precision: a floating-point filter with a proven error bound decides
// the generic case, and exact expansion arithmetic takes over whenever
// the rounded magnitude cannot certify the sign.  The returned double
// has the sign of the exact determinant; it is zero only when a, b, c
// are exactly collinear.
double orient2d(double ax, double ay, double bx, double by, double cx, double cy);
}  // namespace wedge::predicates
