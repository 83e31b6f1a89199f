#pragma once

#include <cstdint>
#include <vector>

#include "spherekern/polar.hpp"

namespace spherekern {

// Deterministic counter-based generator: value(i) is a pure function of
// (seed, i), so sequences are reproducible bit for bit across platforms and
// independent of call order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const;
  double uniform(std::uint64_t counter) const;   // strictly inside (0, 1)
  double gaussian(std::uint64_t counter) const;  // standard normal

 private:
  std::uint64_t seed_;
};

// n points on S^{d-1}: i.i.d. Gaussians normalized to the sphere, converted
// to polar coordinates.  Fully determined by (d, n, seed).
std::vector<PolarPoint> random_sphere_points(int d, int n, std::uint64_t seed);

}  // namespace spherekern
