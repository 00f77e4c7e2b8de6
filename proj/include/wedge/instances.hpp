#pragma once

#include "wedge/geometry.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace wedge
{
// Deterministic 64-bit generator (splitmix64); identical streams on
// every platform, unlike the standard distributions.
class SplitMix64
{
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53 random bits
  double next_double() { return double(next() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
  std::uint64_t state_;
};

// Named distributions: uniform-disk, uniform-square, circle-evenly
// (exact 2*pi*k/n points on the unit circle), triangle-plus-edge (the
// fixed 4-point instance: equilateral triangle plus the midpoint of
// its base).  Throws InvalidInput on unknown names or n < 1.
std::vector<Point> generate(std::string_view distribution, int n, std::uint64_t seed);

// In-place uniform jitter of +-magnitude per coordinate.
void perturb(std::vector<Point> & points, double magnitude, std::uint64_t seed);
}  // namespace wedge
