#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace spherekern {

struct BoundViolation {
  std::string where;  // grid location, e.g. "m=12 n=-3 theta=0.2356"
  double lhs = 0.0;
  double rhs = 0.0;
};

// Result of sweeping one inequality over a grid.  Violations are data, not
// exceptions: a sweep always runs to completion.
struct BoundCertificate {
  std::string bound_name;
  std::string grid_description;
  std::uint64_t points_checked = 0;
  std::uint64_t points_skipped = 0;  // singular grid points, skipped not failed
  double max_ratio = 0.0;            // max over the grid of lhs / rhs
  double stated_constant = 0.0;      // the constant the bound is certified with
  double empirical_constant = 0.0;   // smallest constant that would work here
  std::vector<BoundViolation> violations;
  std::vector<std::pair<double, double>> profile;  // (parameter, empirical value)
  std::string profile_name;
  std::string notes;

  bool passed() const { return violations.empty(); }
  nlohmann::json to_json() const;
  void write_csv(std::ostream& os) const;  // profile as "parameter,value"
};

// Default angular grid theta = pi/40, 2pi/40, ..., 39pi/40.
std::vector<double> default_theta_grid();

// |P_m^n(cos theta)| against
//   Gamma(1/4)/pi (sin theta)^{-1/4} sqrt(Gamma(m+n+1)/Gamma(m-n+1)) m^{-1/4}
// over degrees 1..m_max, all orders |n| <= m.  The order n enters the Gamma
// ratio with its sign.
BoundCertificate certify_lohofer(int m_max = 60,
                                 const std::vector<double>& thetas = default_theta_grid());

// (1-x^2)^{a/2+1/4} |P_n^{(a,a)}(x)| against
//   C 2^a Gamma(n+a+1) / sqrt(Gamma(n+1) Gamma(n+2a+1)) (2n+2a+1)^{-1/4}
// with C = 12, over n <= n_max, the given parameter values, and a uniform
// x-grid of x_points on [-1, 1].
BoundCertificate certify_haagerup(int n_max = 100, const std::vector<double>& a_values = {0.0, 0.5, 1.0, 3.0},
                                  int x_points = 201);

// |ptilde(j, L, l, theta)| against C_j(theta) (2L+j-1)^{1/4} with
//   C_j(theta) = A_j * 12 / sqrt(2) * (sin theta)^{-(j-1)/2},
// over 0 <= l <= L <= L_max and the grid (endpoints included; the bound is
// trivially satisfied there).  The profile records the empirical C_j(theta).
BoundCertificate certify_ptilde(int j, int L_max = 40,
                                const std::vector<double>& thetas = default_theta_grid());

// Componentwise estimate for full harmonics split at axis j:
//   |Y_alpha(xi)| <= D(xi) sqrt(dim_harmonic(j+1, a_j))
//                    * prod_{l=j+1}^{d-1} (2 a_l + l - 1)^{1/4},
//   D(xi) = prod_{l=j+1}^{d-1} C_l(theta_l),
// together with the universal prefix bound
//   |partial_j(alpha, xi)| <= sqrt(dim_harmonic(j+1, a_j)).
// Points with theta_l at a chart endpoint for l > j are singular for D and
// are skipped (counted).  The profile records (point id, D(xi)).
BoundCertificate certify_harmonic_product(int d = 4, int j = 2, int k_max = 12,
                                          std::uint64_t seed = 1234, int n_points = 8);

}  // namespace spherekern
