#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "spherekern/harmonics.hpp"
#include "spherekern/scheme.hpp"

namespace spherekern {

enum class PdVerdict { PositiveDefinite, PositiveSemiDefiniteDegenerate, Indefinite };

std::string verdict_name(PdVerdict v);

struct GramReport {
  int n = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  PdVerdict verdict = PdVerdict::PositiveDefinite;
  int truncation_k_max = 0;
  double tolerance = 0.0;
  std::optional<Eigen::VectorXcd> witness;  // present iff verdict is degenerate
  double witness_quadratic_form = 0.0;      // |c^H K c| for the unit witness

  nlohmann::json to_json() const;
};

// K(p, q) = sum over active indices of d_alpha Y_alpha(p) conj(Y_alpha(q)).
std::complex<double> kernel_eval(const CoefficientScheme& s, const PolarPoint& p,
                                 const PolarPoint& q);

// Isotropic kernel sum_k b_k c_k P_k^{(a,b)}(t) for any of the five
// families; b holds the coefficients b_0 .. b_{K}.
double isotropic_kernel_eval(const std::vector<double>& b, const ManifoldSpec& m, double t);

// Collocation matrix B with one row per active index (degree-major,
// lexicographic within a degree) and one column per point: B(f, x) = f(x).
Eigen::MatrixXcd collocation_matrix(const CoefficientScheme& s,
                                    const std::vector<PolarPoint>& pts);

// Hermitian kernel matrix K with K(p, q) as above.  Throws if two points are
// closer than 1e-9 in geodesic distance (the message names the pair).
Eigen::MatrixXcd gram_matrix(const CoefficientScheme& s, const std::vector<PolarPoint>& pts);

// Classifies a Hermitian matrix by its extreme eigenvalues:
//   min > tol * scale       -> PositiveDefinite
//   min < -tol * scale      -> Indefinite
//   otherwise               -> PositiveSemiDefiniteDegenerate, with the
//                              eigenvector of the smallest eigenvalue as a
//                              unit witness (deterministic phase).
// scale = max(1, max_eigenvalue).  Throws std::domain_error if the input
// deviates from Hermitian by more than 1e-10 (max absolute entry).
GramReport pd_verdict(const Eigen::MatrixXcd& K, int truncation_k_max, double tol = 1e-10);

// Nullspace search on the collocation matrix: returns a unit coefficient
// vector c with ||B c|| <= tol * sigma_max(B) if the smallest singular value
// falls under that threshold, and nothing otherwise.
std::optional<Eigen::VectorXcd> spd_witness_search(const CoefficientScheme& s,
                                                   const std::vector<PolarPoint>& pts,
                                                   double tol = 1e-10);

struct InvarianceReport {
  PdVerdict first = PdVerdict::PositiveDefinite;
  PdVerdict second = PdVerdict::PositiveDefinite;
  bool same_class = false;
};

// Requires s1 and s2 to share the same active set (weights may differ);
// reports whether the positive-definiteness class of the Gram matrix is the
// same under both weight models.
InvarianceReport scheme_invariance_check(const CoefficientScheme& s1, const CoefficientScheme& s2,
                                         const std::vector<PolarPoint>& pts, double tol = 1e-10);

}  // namespace spherekern
