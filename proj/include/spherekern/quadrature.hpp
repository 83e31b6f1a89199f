#pragma once

#include <vector>

#include "spherekern/polar.hpp"

namespace spherekern {

struct QuadratureRule {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // positive, sum to the weight-function mass
};

// Gauss rule for the weight (1-x^2)^g on [-1, 1], g > -1, built by the
// Golub-Welsch tridiagonal eigenvalue method.  Exact for polynomials of
// degree <= 2n-1 against that weight.
QuadratureRule gauss_jacobi_rule(int n, double g);

// Product cubature on S^{d-1} in polar coordinates, normalized to the
// probability measure (weights sum to 1): trapezoid in the azimuth, Gauss
// rules with weight (1-x^2)^{(j-2)/2} on each remaining axis.  Integrates
// products Y_a conj(Y_b) exactly for degrees up to max_degree.
struct SphereRule {
  std::vector<PolarPoint> points;
  std::vector<double> weights;
};

SphereRule sphere_product_rule(int d, int max_degree);

}  // namespace spherekern
