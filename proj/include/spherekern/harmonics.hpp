#pragma once

#include <complex>
#include <vector>

#include "spherekern/manifold.hpp"
#include "spherekern/multi_index.hpp"
#include "spherekern/polar.hpp"

namespace spherekern {

// Addition-formula constant c_k for a manifold with Jacobi parameters
// (alpha, beta):
//   c_0 = 1 exactly;
//   c_k = Gamma(b+1) (2k+a+b+1) Gamma(k+a+b+1) / (Gamma(a+b+2) Gamma(k+b+1)).
// On the sphere, c_k * P_k^{(a,a)}(1) equals dim_harmonic(d, k).
double ck_constant(const ManifoldSpec& m, int k);
double log_ck_constant(const ManifoldSpec& m, int k);

// Caches the per-axis ptilde tables and azimuthal phases for one point, so
// that evaluating many harmonics at the same point costs O(d) lookups each.
class HarmonicEvaluator {
 public:
  HarmonicEvaluator(int d, int k_max, const PolarPoint& p);

  int dim() const { return d_; }
  int k_max() const { return k_max_; }
  const PolarPoint& point() const { return p_; }

  std::complex<double> eval(const MultiIndex& a) const;

 private:
  // table index for the (L, l) entry of one axis, 0 <= l <= L <= k_max
  static std::size_t tri(int L, int l) {
    return static_cast<std::size_t>(L) * (static_cast<std::size_t>(L) + 1) / 2 +
           static_cast<std::size_t>(l);
  }

  int d_ = 0;
  int k_max_ = 0;
  PolarPoint p_;
  std::vector<std::vector<double>> axis_;   // axis_[j-2][tri(L,l)] = ptilde(j, L, l, theta_j)
  std::vector<std::complex<double>> phase_; // phase_[a1 + k_max] = e^{i a1 theta_1} / sqrt(2 pi)
};

// Y_alpha(p) for one multi-index; convenience wrapper around the evaluator.
std::complex<double> eval_harmonic(int d, const MultiIndex& a, const PolarPoint& p);

// sum_{alpha in tau_k} Y_alpha(p) conj(Y_alpha(q)).  Equals
// ck_constant * P_k^{(a,a)}(cos geodesic(p, q)) by the addition formula.
std::complex<double> zonal_sum(int d, int k, const PolarPoint& p, const PolarPoint& q);

}  // namespace spherekern
