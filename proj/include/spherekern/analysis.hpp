#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spherekern/gram.hpp"
#include "spherekern/scheme.hpp"

namespace spherekern {

// A value per degree, e.g. a decay diagnostic indexed by k.
struct RateSequence {
  std::vector<int> degrees;
  std::vector<double> values;
  std::string label;

  void write_csv(std::ostream& os) const;  // header "degree,value"
  nlohmann::json to_json() const;
};

// Finite-sample reading of "tends to zero": split into windows, take the max
// of each; require the maxima to be non-increasing over the last half and
// the final window to sit below half the first.  An all-zero sequence
// qualifies trivially.
struct TrendSummary {
  bool tends_to_zero = false;
  bool defined = false;  // false when the sequence is too short / empty
  std::vector<double> window_maxima;
  double first_window_max = 0.0;
  double final_window_max = 0.0;
};

TrendSummary assess_trend(const std::vector<double>& values, int windows = 4);

// Degree bookkeeping: all active degrees N, their even and odd parts, and a
// flag saying both parts are populated in a truncation-aware sense (at
// least three degrees each, one of them in the top quartile of [0, K_max]).
struct ParitySplit {
  std::vector<int> all;
  std::vector<int> even;
  std::vector<int> odd;
  bool both_infinite_proxy = false;
  int k_max = 0;
};

ParitySplit parity_split(const CoefficientScheme& s);

// r_k = |sum over the complement A_k^c of Y(p) conj(Y(q))| / (c_k P_k(1)),
// one value per degree of the scheme's domain.  Only defined on the sphere.
RateSequence asympt_ratio_sequence(const CoefficientScheme& s, const ManifoldSpec& m,
                                   const PolarPoint& p, const PolarPoint& q);

// |A_k^c| / k^{(d-j-1)/2}, per parity class over degrees >= 1, plus trend
// verdicts.  Requires every index with a_j = 0 to stay active (the zero-set
// harmonics must be fully weighted); violations raise std::domain_error
// listing missing indices.
struct RateCheckResult {
  RateSequence even;
  RateSequence odd;
  TrendSummary even_trend;
  TrendSummary odd_trend;
  int j = 0;
  double exponent = 0.0;
  bool positive = false;  // both parity classes trend to zero

  nlohmann::json to_json() const;
};

RateCheckResult corollary_rate_check(const CoefficientScheme& s, int j);

// Sharper weighted diagnostic:
//   sum over A_k^c of prod_{l=j+1}^{d-1} (2 a_l + l - 1)^{1/2} / (2k + l - 1),
// same preconditions, same parity split and trend reading.
RateCheckResult weighted_complement_sum(const CoefficientScheme& s, int j);

// The exact ratio  dim_harmonic(j+1, k) / (c_k P_k^{(a,a)}(1))  on S^{d-1},
// its closed Gamma form, and the product bound
//   3^{d-j-1} Gamma(d-1)/Gamma(j) * prod_{l=j+1}^{d-1} (2k + l - 1)^{-1}.
struct RatioChainResult {
  double lhs = 0.0;         // exact ratio via dimension / addition constant
  double lhs_gamma = 0.0;   // closed Gamma form (must agree with lhs)
  double bound = 0.0;
  bool holds = false;       // lhs <= bound (with 1e-12 slack)
  bool forms_agree = false; // |lhs - lhs_gamma| <= 1e-12 * lhs
};

RatioChainResult ratio_chain_bound(int d, int j, int k);  // 1 <= j <= d-2, k >= 1

// P_k^{(b,a)}(1) / P_k^{(a,b)}(1) for k = 0..k_max; requires a > b.
RateSequence jacobi_ratio_sequence(double a, double b, int k_max);

// Truncation-level verdict for isotropic kernels on the projective families.
enum class IsotropicVerdict { NecessaryFailed, SufficientMet, Indeterminate };

std::string isotropic_verdict_name(IsotropicVerdict v);

struct IsotropicReport {
  IsotropicVerdict verdict = IsotropicVerdict::Indeterminate;
  std::vector<int> active_degrees;       // N
  std::vector<int> full_weight_degrees;  // L: degrees whose whole tau_k is active
  nlohmann::json to_json() const;
};

// Refuses the sphere (parity-aware analysis applies there instead).
IsotropicReport isotropic_sufficiency(const CoefficientScheme& s, const ManifoldSpec& m);

// Largest axis index whose angle sits at a chart endpoint:
//   max({2} U {j in [2, d-1] : theta_j in {0, pi} within 1e-9}).
int jxi_of_point(const PolarPoint& p);

}  // namespace spherekern
