#pragma once

#include <span>
#include <vector>

namespace spherekern {

// Polar coordinates on S^{d-1}: theta[0] = theta_1 in [0, 2 pi) is the
// azimuth, theta[i] = theta_{i+1} in [0, pi] for i >= 1.  The chart is
//   x_1 = cos theta_{d-1}
//   x_r = cos theta_{d-r} * prod_{i=d-r+1}^{d-1} sin theta_i   (2 <= r <= d-1)
//   x_d = sin theta_1    * prod_{i=2}^{d-1}    sin theta_i
struct PolarPoint {
  std::vector<double> theta;

  PolarPoint() = default;
  explicit PolarPoint(std::vector<double> t);

  int dim() const { return static_cast<int>(theta.size()) + 1; }
  // 1-based: angle(j) = theta_j.
  double angle(int j) const { return theta[static_cast<std::size_t>(j) - 1]; }

  void validate() const;  // throws std::domain_error on out-of-range angles
};

std::vector<double> to_cartesian(const PolarPoint& p);

// Inverse chart.  The input must be a unit vector to within 1e-9.
PolarPoint polar_from_cartesian(std::span<const double> x);

// theta_1 -> theta_1 + pi (mod 2 pi), theta_j -> pi - theta_j.
PolarPoint antipode(const PolarPoint& p);

}  // namespace spherekern
