#include "spherekern/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spherekern {

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  // splitmix64 finalizer over a Weyl sequence on (seed, counter)
  std::uint64_t z = seed_ + counter * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
  // 53 random bits, offset by half a ulp so 0 and 1 are unreachable
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::gaussian(std::uint64_t counter) const {
  const double u1 = uniform(2 * counter);
  const double u2 = uniform(2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<PolarPoint> random_sphere_points(int d, int n, std::uint64_t seed) {
  if (d < 2) throw std::domain_error("random_sphere_points: dimension must be >= 2");
  if (n < 0) throw std::domain_error("random_sphere_points: count must be >= 0");
  CounterRng rng(seed);
  std::vector<PolarPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> x(static_cast<std::size_t>(d));
    double norm2 = 0.0;
    for (int c = 0; c < d; ++c) {
      x[static_cast<std::size_t>(c)] =
          rng.gaussian(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(d) +
                       static_cast<std::uint64_t>(c));
      norm2 += x[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
    }
    const double norm = std::sqrt(norm2);
    if (!(norm > 1e-8)) {
      throw std::runtime_error("random_sphere_points: degenerate Gaussian draw");
    }
    for (double& v : x) v /= norm;
    out.push_back(polar_from_cartesian(x));
  }
  return out;
}

}  // namespace spherekern
