#include "spherekern/polar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spherekern {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin/cos with exact values at the chart endpoints so that subsphere points
// come out exactly and singular-axis detection is robust.
void sincos_polar(double t, double& s, double& c) {
  if (t == 0.0) {
    s = 0.0;
    c = 1.0;
  } else if (t == kPi) {
    s = 0.0;
    c = -1.0;
  } else {
    s = std::sin(t);
    c = std::cos(t);
  }
}
}  // namespace

PolarPoint::PolarPoint(std::vector<double> t) : theta(std::move(t)) { validate(); }

void PolarPoint::validate() const {
  if (theta.empty()) throw std::domain_error("PolarPoint: needs at least one angle (d >= 2)");
  if (!(theta[0] >= 0.0) || !(theta[0] < kTwoPi)) {
    throw std::domain_error("PolarPoint: azimuth must lie in [0, 2 pi), got " +
                            std::to_string(theta[0]));
  }
  for (std::size_t i = 1; i < theta.size(); ++i) {
    if (!(theta[i] >= 0.0) || !(theta[i] <= kPi)) {
      throw std::domain_error("PolarPoint: theta_" + std::to_string(i + 1) +
                              " must lie in [0, pi], got " + std::to_string(theta[i]));
    }
  }
}

std::vector<double> to_cartesian(const PolarPoint& p) {
  const int d = p.dim();
  std::vector<double> x(static_cast<std::size_t>(d));
  double running = 1.0;  // prod of sines of the angles consumed so far
  for (int r = 1; r <= d - 1; ++r) {
    double s, c;
    sincos_polar(p.angle(d - r), s, c);
    x[static_cast<std::size_t>(r) - 1] = running * c;
    running *= s;
  }
  x[static_cast<std::size_t>(d) - 1] = running;
  return x;
}

PolarPoint polar_from_cartesian(std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  if (d < 2) throw std::domain_error("polar_from_cartesian: need dimension >= 2");
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw std::domain_error("polar_from_cartesian: input is not a unit vector (within 1e-9)");
  }
  std::vector<double> theta(static_cast<std::size_t>(d) - 1);
  // tail2[i] = x_{i+1}^2 + ... + x_d^2 (0-based over x)
  std::vector<double> tail2(static_cast<std::size_t>(d) + 1, 0.0);
  for (int i = d - 1; i >= 0; --i) {
    tail2[static_cast<std::size_t>(i)] =
        tail2[static_cast<std::size_t>(i) + 1] + x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  }
  for (int j = d - 1; j >= 2; --j) {
    // theta_j pairs with x_{d-j}; the residual tail has squared norm tail2[d-j].
    const std::size_t idx = static_cast<std::size_t>(d - j - 1);
    theta[static_cast<std::size_t>(j) - 1] =
        std::atan2(std::sqrt(tail2[idx + 1]), x[idx]);
  }
  double t1 = std::atan2(x[static_cast<std::size_t>(d) - 1], x[static_cast<std::size_t>(d) - 2]);
  if (t1 < 0.0) t1 += kTwoPi;
  if (t1 >= kTwoPi) t1 = 0.0;
  theta[0] = t1;
  return PolarPoint(std::move(theta));
}

PolarPoint antipode(const PolarPoint& p) {
  std::vector<double> t = p.theta;
  t[0] += kPi;
  if (t[0] >= kTwoPi) t[0] -= kTwoPi;
  for (std::size_t i = 1; i < t.size(); ++i) t[i] = kPi - t[i];
  return PolarPoint(std::move(t));
}

}  // namespace spherekern
