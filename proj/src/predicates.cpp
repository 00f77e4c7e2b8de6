#include "wedge/predicates.hpp"

#include <cmath>
#include <limits>

// Expansion arithmetic after Shewchuk.  A value is represented as a sum
// of non-overlapping doubles ordered by increasing magnitude; the basic
// operations below are exact because each rounding error is itself
// representable and is carried along as an extra component.
//
// All of this assumes IEEE-754 binary64 with round-to-nearest and no
// contraction of the written expressions (see the compile flags).

namespace wedge::predicates
{
namespace
{
double constexpr kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53

// |a| >= |b| is not required; both tails are recovered branch-free.
inline void TwoSum(double a, double b, double & x, double & y)
{
  x = a + b;
  double bv = x - a;
  double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void TwoDiff(double a, double b, double & x, double & y)
{
  x = a - b;
  double bv = a - x;
  double av = x + bv;
  y = (a - av) + (bv - b);
}

// fma gives the rounding error of a*b exactly.
inline void TwoProduct(double a, double b, double & x, double & y)
{
  x = a * b;
  y = std::fma(a, b, -x);
}

// (a1,a0) - (b1,b0) -> x[0..3], increasing magnitude order.
inline void TwoTwoDiff(double a1, double a0, double b1, double b0, double x[4])
{
  double s, t, u, v;
  TwoDiff(a0, b0, s, x[0]);
  TwoDiff(a1, b1, t, u);
  TwoSum(s, u, v, x[1]);
  TwoSum(t, v, x[3], x[2]);
}

// Sum of two expansions, eliminating zero components.  Returns length.
int FastExpansionSumZeroElim(int elen, double const * e, int flen, double const * f, double * h)
{
  double q, qnew, hh;
  int eindex = 0, findex = 0, hindex = 0;
  double enow = e[0];
  double fnow = f[0];

  if ((fnow > enow) == (fnow > -enow))
  {
    q = enow;
    enow = e[++eindex];
  }
  else
  {
    q = fnow;
    fnow = f[++findex];
  }
  if (eindex < elen && findex < flen)
  {
    if ((fnow > enow) == (fnow > -enow))
    {
      qnew = enow + q;
      hh = q - (qnew - enow);
      enow = e[++eindex];
    }
    else
    {
      qnew = fnow + q;
      hh = q - (qnew - fnow);
      fnow = f[++findex];
    }
    q = qnew;
    if (hh != 0.0)
      h[hindex++] = hh;
    while (eindex < elen && findex < flen)
    {
      if ((fnow > enow) == (fnow > -enow))
      {
        TwoSum(q, enow, qnew, hh);
        enow = e[++eindex];
      }
      else
      {
        TwoSum(q, fnow, qnew, hh);
        fnow = f[++findex];
      }
      q = qnew;
      if (hh != 0.0)
        h[hindex++] = hh;
    }
  }
  while (eindex < elen)
  {
    TwoSum(q, enow, qnew, hh);
    enow = e[++eindex];
    q = qnew;
    if (hh != 0.0)
      h[hindex++] = hh;
  }
  while (findex < flen)
  {
    TwoSum(q, fnow, qnew, hh);
    fnow = f[++findex];
    q = qnew;
    if (hh != 0.0)
      h[hindex++] = hh;
  }
  if (q != 0.0 || hindex == 0)
    h[hindex++] = q;
  return hindex;
}

double Estimate(int elen, double const * e)
{
  double q = e[0];
  for (int i = 1; i < elen; ++i)
    q += e[i];
  return q;
}

// Exact fallback stages.  detsum is |bc-part| + |ac-part| from the filter.
double Orient2dAdapt(double ax, double ay, double bx, double by, double cx, double cy,
                     double detsum)
{
  double const acx = ax - cx;
  double const bcx = bx - cx;
  double const acy = ay - cy;
  double const bcy = by - cy;

  double detleft, detlefttail, detright, detrighttail;
  TwoProduct(acx, bcy, detleft, detlefttail);
  TwoProduct(acy, bcx, detright, detrighttail);

  double B[4];
  TwoTwoDiff(detleft, detlefttail, detright, detrighttail, B);

  double det = Estimate(4, B);
  double const errboundB = (1.0 + 3.0 * kEps) * kEps * detsum;
  if (det >= errboundB || -det >= errboundB)
    return det;

  // The tails of the coordinate differences; zero iff the subtractions
  // above were exact, in which case B is already the exact determinant.
  double acxtail, bcxtail, acytail, bcytail;
  {
    double t = ax - acx;
    acxtail = (ax - (acx + t)) + (t - cx);
    t = bx - bcx;
    bcxtail = (bx - (bcx + t)) + (t - cx);
    t = ay - acy;
    acytail = (ay - (acy + t)) + (t - cy);
    t = by - bcy;
    bcytail = (by - (bcy + t)) + (t - cy);
  }
  if (acxtail == 0.0 && acytail == 0.0 && bcxtail == 0.0 && bcytail == 0.0)
    return det;

  double const errboundC =
      (2.25 + 8.0 * kEps) * kEps * kEps * detsum + (1.5 + 2.0 * kEps) * kEps * std::fabs(det);
  det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
  if (det >= errboundC || -det >= errboundC)
    return det;

  double u[4];
  double s1, s0, t1, t0;

  TwoProduct(acxtail, bcy, s1, s0);
  TwoProduct(acytail, bcx, t1, t0);
  TwoTwoDiff(s1, s0, t1, t0, u);
  double C1[8];
  int const c1len = FastExpansionSumZeroElim(4, B, 4, u, C1);

  TwoProduct(acx, bcytail, s1, s0);
  TwoProduct(acy, bcxtail, t1, t0);
  TwoTwoDiff(s1, s0, t1, t0, u);
  double C2[12];
  int const c2len = FastExpansionSumZeroElim(c1len, C1, 4, u, C2);

  TwoProduct(acxtail, bcytail, s1, s0);
  TwoProduct(acytail, bcxtail, t1, t0);
  TwoTwoDiff(s1, s0, t1, t0, u);
  double D[16];
  int const dlen = FastExpansionSumZeroElim(c2len, C2, 4, u, D);

  return D[dlen - 1];
}
}  // namespace

double orient2d(double ax, double ay, double bx, double by, double cx, double cy)
{
  double const detleft = (ax - cx) * (by - cy);
  double const detright = (ay - cy) * (bx - cx);
  double const det = detleft - detright;
  double detsum;

  if (detleft > 0.0)
  {
    if (detright <= 0.0)
      return det;
    detsum = detleft + detright;
  }
  else if (detleft < 0.0)
  {
    if (detright >= 0.0)
      return det;
    detsum = -detleft - detright;
  }
  else
  {
    return det;
  }

  double const errboundA = (1.5 + 4.0 * kEps) * kEps * detsum;
  if (det >= errboundA || -det >= errboundA)
    return det;

  return Orient2dAdapt(ax, ay, bx, by, cx, cy, detsum);
}
}  // namespace wedge::predicates
