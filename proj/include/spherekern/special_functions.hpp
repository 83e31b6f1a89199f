#pragma once

#include <vector>

namespace spherekern {

// Parameter pair (a, b) for the Jacobi family P_n^{(a,b)}.  The three-term
// recurrence used here is well conditioned for a >= -1/2, b >= -1, which
// covers every geometry this library works with.
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;
};

// log Gamma(x) for x > 0.  Thin wrapper with domain checking.
double log_gamma(double x);

// Jacobi polynomial P_n^{(a,b)}(x) for x in [-1, 1].
double jacobi_p(int n, const JacobiParams& p, double x);

// All values P_0^{(a,b)}(x) .. P_n^{(a,b)}(x) from one pass of the recurrence.
std::vector<double> jacobi_all(int n, const JacobiParams& p, double x);

// P_n^{(a,b)}(1) = Gamma(n+a+1) / (Gamma(n+1) Gamma(a+1)), and its log.
double jacobi_at_one(int n, const JacobiParams& p);
double log_jacobi_at_one(int n, const JacobiParams& p);

// Gegenbauer polynomial C_n^{lambda}(x), lambda > 0, expressed through the
// Jacobi family with parameters (lambda - 1/2, lambda - 1/2).
double gegenbauer_c(int n, double lambda, double x);

// Ferrers function of negative order, P_nu^{-mu}(x), for nu >= mu >= 0 with
// nu - mu a nonnegative integer and |x| < 1:
//   P_nu^{-mu}(x) = (1-x^2)^{mu/2} Gamma(nu-mu+1) / (2^mu Gamma(nu+1))
//                   * P_{nu-mu}^{(mu,mu)}(x).
double legendre_neg_order(double nu, double mu, double x);

// Per-axis normalization constant A_j used by ptilde:
//   A_2^2 = 4 pi,   A_j^2 = sqrt(pi) Gamma(j/2) / Gamma((j+1)/2)  (j >= 3).
// Calibrated so that the normalized axis factors are orthonormal with respect
// to the probability measure induced by the polar chart; see the addition
// formula tests for the end-to-end verification.
double axis_norm_constant(int j);

// Normalized associated-Legendre axis factor for the polar chart:
//   ptilde(j, L, l, theta) with j >= 2, 0 <= |l| <= L, theta in [0, pi].
// Negative l is only admitted for j == 2, with the sign convention
//   ptilde(2, L, -m, theta) = (-1)^m ptilde(2, L, m, theta).
// For l > 0 the value is exactly 0 at theta == 0 and theta == pi.
double ptilde(int j, int L, int l, double theta);

}  // namespace spherekern
