#include "wedge/instances.hpp"

#include "wedge/errors.hpp"

#include <cmath>
#include <string>

namespace wedge
{
std::vector<Point> generate(std::string_view distribution, int n, std::uint64_t seed)
{
  if (n < 1) throw InvalidInput("instance size must be at least 1");
  std::vector<Point> out;

  if (distribution == "uniform-disk")
  {
    SplitMix64 rng(seed);
    out.reserve(n);
    for (int i = 0; i < n; ++i)
    {
      double const r = std::sqrt(rng.next_double());
      double const phi = kTwoPi * rng.next_double();
      out.push_back(Point{r * std::cos(phi), r * std::sin(phi)});
    }
    return out;
  }
  if (distribution == "uniform-square")
  {
    SplitMix64 rng(seed);
    out.reserve(n);
    for (int i = 0; i < n; ++i)
    {
      double const x = rng.next_double();
      double const y = rng.next_double();
      out.push_back(Point{x, y});
    }
    return out;
  }
  if (distribution == "circle-evenly")
  {
    out.reserve(n);
    for (int k = 0; k < n; ++k)
    {
      double const t = kTwoPi * k / n;
      out.push_back(Point{std::cos(t), std::sin(t)});
    }
    return out;
  }
  if (distribution == "triangle-plus-edge")
  {
    return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.5, std::sqrt(3.0) / 2.0},
            Point{0.5, 0.0}};
  }
  throw InvalidInput("unknown distribution '" + std::string(distribution) + "'");
}

void perturb(std::vector<Point> & points, double magnitude, std::uint64_t seed)
{
  if (!(magnitude >= 0.0)) throw InvalidInput("perturbation magnitude must be >= 0");
  SplitMix64 rng(seed ^ 0x70657274757262ULL);  // decorrelate from generation
  for (Point & p : points)
  {
    p.x += rng.uniform(-magnitude, magnitude);
    p.y += rng.uniform(-magnitude, magnitude);
  }
}
}  // namespace wedge
