#include "spherekern/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "spherekern/special_functions.hpp"

namespace spherekern {

namespace {
constexpr double kPi = std::numbers::pi;
}

void RateSequence::write_csv(std::ostream& os) const {
  os << "degree,value\n";
  char buf[64];
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
    os << degrees[i] << "," << buf << "\n";
  }
}

nlohmann::json RateSequence::to_json() const {
  nlohmann::json js;
  js["label"] = label;
  js["degrees"] = degrees;
  js["values"] = values;
  return js;
}

TrendSummary assess_trend(const std::vector<double>& values, int windows) {
  TrendSummary t;
  if (windows < 2) throw std::domain_error("assess_trend: need at least two windows");
  if (values.size() < static_cast<std::size_t>(windows)) return t;  // undefined
  t.defined = true;
  const std::size_t n = values.size();
  t.window_maxima.assign(static_cast<std::size_t>(windows), 0.0);
  for (int w = 0; w < windows; ++w) {
    const std::size_t lo = n * static_cast<std::size_t>(w) / static_cast<std::size_t>(windows);
    const std::size_t hi =
        n * (static_cast<std::size_t>(w) + 1) / static_cast<std::size_t>(windows);
    double m = 0.0;
    for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(values[i]));
    t.window_maxima[static_cast<std::size_t>(w)] = m;
  }
  t.first_window_max = t.window_maxima.front();
  t.final_window_max = t.window_maxima.back();
  const bool all_zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
  if (all_zero) {
    t.tends_to_zero = true;
    return t;
  }
  bool tail_ok = true;
  for (int w = windows / 2 - 1; w + 1 < windows; ++w) {
    if (t.window_maxima[static_cast<std::size_t>(w)] <
        t.window_maxima[static_cast<std::size_t>(w) + 1]) {
      tail_ok = false;
      break;
    }
  }
  t.tends_to_zero = tail_ok && t.final_window_max < 0.5 * t.first_window_max;
  return t;
}

ParitySplit parity_split(const CoefficientScheme& s) {
  ParitySplit ps;
  ps.k_max = s.k_max();
  ps.all = s.active_degrees();
  for (int k : ps.all) (k % 2 == 0 ? ps.even : ps.odd).push_back(k);
  const auto populated = [&](const std::vector<int>& v) {
    if (v.size() < 3) return false;
    // top quartile of [0, K_max]: k >= 3/4 K_max
    return std::any_of(v.begin(), v.end(), [&](int k) { return 4 * k >= 3 * ps.k_max; });
  };
  ps.both_infinite_proxy = populated(ps.even) && populated(ps.odd);
  return ps;
}

RateSequence asympt_ratio_sequence(const CoefficientScheme& s, const ManifoldSpec& m,
                                   const PolarPoint& p, const PolarPoint& q) {
  if (!m.is_sphere()) {
    throw std::invalid_argument(
        "asympt_ratio_sequence: only supported on the sphere (no explicit harmonic basis is "
        "available for the projective families)");
  }
  if (m.d != s.d()) {
    throw std::domain_error("asympt_ratio_sequence: manifold and scheme dimensions differ");
  }
  HarmonicEvaluator ep(s.d(), s.k_max(), p);
  HarmonicEvaluator eq(s.d(), s.k_max(), q);
  RateSequence r;
  r.label = "asympt-ratio";
  const JacobiParams jp = m.jacobi();
  for (int k : s.domain_degrees()) {
    std::complex<double> acc = 0.0;
    s.for_each_complement(k, [&](const MultiIndex& a) {
      acc += ep.eval(a) * std::conj(eq.eval(a));
    });
    const double scale = std::exp(log_ck_constant(m, k) + log_jacobi_at_one(k, jp));
    r.degrees.push_back(k);
    r.values.push_back(std::abs(acc) / scale);
  }
  return r;
}

namespace {
// Every index with a_j = 0 must stay active; otherwise report examples.
void require_zero_set_active(const CoefficientScheme& s, int j) {
  if (j < 1 || j > s.d() - 2) {
    throw std::domain_error("rate check: axis must satisfy 1 <= j <= d-2");
  }
  std::vector<std::string> missing;
  // A JZero rule on a later axis j' > j keeps only a_{j'} = 0, which drops
  // zero-set members of axis j such as (0,...,0,k,...,k) with k from j' on.
  if (s.rule() == CoefficientScheme::Rule::JZero && s.jzero_axis() > j) {
    for (int k : s.domain_degrees()) {
      if (k == 0) continue;
      std::vector<int> e(static_cast<std::size_t>(s.d()) - 1, 0);
      for (int i = s.jzero_axis(); i <= s.d() - 1; ++i) e[static_cast<std::size_t>(i) - 1] = k;
      missing.push_back(MultiIndex(e).str());
      if (missing.size() >= 3) break;
    }
  }
  for (const auto& [k, list] : s.exclusions()) {
    (void)k;
    for (const MultiIndex& a : list) {
      if (a.component(j) == 0) {
        missing.push_back(a.str());
        if (missing.size() >= 6) break;
      }
    }
    if (missing.size() >= 6) break;
  }
  if (!missing.empty()) {
    std::string msg = "rate check: indices with a_" + std::to_string(j) +
                      " = 0 must remain active; missing:";
    for (const auto& m : missing) msg += " " + m;
    throw std::domain_error(msg);
  }
}

RateCheckResult finish_rate_check(RateCheckResult r) {
  r.even_trend = assess_trend(r.even.values);
  r.odd_trend = assess_trend(r.odd.values);
  r.positive = r.even_trend.defined && r.odd_trend.defined && r.even_trend.tends_to_zero &&
               r.odd_trend.tends_to_zero;
  return r;
}
}  // namespace

nlohmann::json RateCheckResult::to_json() const {
  nlohmann::json js;
  js["j"] = j;
  js["exponent"] = exponent;
  js["positive"] = positive;
  js["even"] = even.to_json();
  js["odd"] = odd.to_json();
  js["even_trend"] = {{"tends_to_zero", even_trend.tends_to_zero},
                      {"defined", even_trend.defined},
                      {"window_maxima", even_trend.window_maxima}};
  js["odd_trend"] = {{"tends_to_zero", odd_trend.tends_to_zero},
                     {"defined", odd_trend.defined},
                     {"window_maxima", odd_trend.window_maxima}};
  return js;
}

RateCheckResult corollary_rate_check(const CoefficientScheme& s, int j) {
  require_zero_set_active(s, j);
  RateCheckResult r;
  r.j = j;
  r.exponent = 0.5 * (s.d() - j - 1);
  r.even.label = "even";
  r.odd.label = "odd";
  for (int k : s.domain_degrees()) {
    if (k == 0) continue;
    const double v =
        static_cast<double>(s.complement_count(k)) / std::pow(static_cast<double>(k), r.exponent);
    RateSequence& dst = (k % 2 == 0) ? r.even : r.odd;
    dst.degrees.push_back(k);
    dst.values.push_back(v);
  }
  return finish_rate_check(std::move(r));
}

RateCheckResult weighted_complement_sum(const CoefficientScheme& s, int j) {
  require_zero_set_active(s, j);
  RateCheckResult r;
  r.j = j;
  r.exponent = 0.5 * (s.d() - j - 1);
  r.even.label = "even-weighted";
  r.odd.label = "odd-weighted";
  const int d = s.d();
  for (int k : s.domain_degrees()) {
    if (k == 0) continue;
    double sum = 0.0;
    s.for_each_complement(k, [&](const MultiIndex& a) {
      double term = 1.0;
      for (int l = j + 1; l <= d - 1; ++l) {
        term *= std::sqrt(2.0 * a.component(l) + l - 1.0) / (2.0 * k + l - 1.0);
      }
      sum += term;
    });
    RateSequence& dst = (k % 2 == 0) ? r.even : r.odd;
    dst.degrees.push_back(k);
    dst.values.push_back(sum);
  }
  return finish_rate_check(std::move(r));
}

RatioChainResult ratio_chain_bound(int d, int j, int k) {
  if (d < 3) throw std::domain_error("ratio_chain_bound: dimension must be >= 3");
  if (j < 1 || j > d - 2) throw std::domain_error("ratio_chain_bound: need 1 <= j <= d-2");
  if (k < 1) throw std::domain_error("ratio_chain_bound: degree must be >= 1");
  RatioChainResult r;
  const ManifoldSpec sphere = ManifoldSpec::sphere(d);
  const JacobiParams jp = sphere.jacobi();
  r.lhs = std::exp(std::log(static_cast<double>(dim_harmonic(j + 1, k))) -
                   log_ck_constant(sphere, k) - log_jacobi_at_one(k, jp));
  r.lhs_gamma = std::exp(log_gamma(d - 1.0) + std::log(2.0 * k + j - 1.0) +
                         log_gamma(k + j - 1.0) - log_gamma(static_cast<double>(j)) -
                         std::log(2.0 * k + d - 2.0) - log_gamma(k + d - 2.0));
  double prod = 1.0;
  for (int l = j + 1; l <= d - 1; ++l) prod /= (2.0 * k + l - 1.0);
  r.bound = std::pow(3.0, d - j - 1) *
            std::exp(log_gamma(d - 1.0) - log_gamma(static_cast<double>(j))) * prod;
  r.forms_agree = std::abs(r.lhs - r.lhs_gamma) <= 1e-12 * std::abs(r.lhs);
  r.holds = r.lhs <= r.bound * (1.0 + 1e-12);
  return r;
}

RateSequence jacobi_ratio_sequence(double a, double b, int k_max) {
  if (!(a > b)) {
    throw std::domain_error("jacobi_ratio_sequence: requires a > b");
  }
  if (k_max < 0) throw std::domain_error("jacobi_ratio_sequence: k_max must be >= 0");
  RateSequence r;
  r.label = "jacobi-ratio";
  const double base = log_gamma(a + 1.0) - log_gamma(b + 1.0);
  for (int k = 0; k <= k_max; ++k) {
    r.degrees.push_back(k);
    r.values.push_back(std::exp(base + log_gamma(k + b + 1.0) - log_gamma(k + a + 1.0)));
  }
  return r;
}

std::string isotropic_verdict_name(IsotropicVerdict v) {
  switch (v) {
    case IsotropicVerdict::NecessaryFailed: return "necessary-failed";
    case IsotropicVerdict::SufficientMet: return "sufficient-met";
    case IsotropicVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

nlohmann::json IsotropicReport::to_json() const {
  nlohmann::json js;
  js["verdict"] = isotropic_verdict_name(verdict);
  js["active_degrees"] = active_degrees;
  js["full_weight_degrees"] = full_weight_degrees;
  return js;
}

IsotropicReport isotropic_sufficiency(const CoefficientScheme& s, const ManifoldSpec& m) {
  if (m.is_sphere()) {
    throw std::invalid_argument(
        "isotropic_sufficiency: the sphere requires the parity-aware analysis (parity_split / "
        "asympt_ratio_sequence); this check covers the projective families only");
  }
  IsotropicReport rep;
  rep.active_degrees = s.active_degrees();
  for (int k : rep.active_degrees) {
    if (s.complement_count(k) == 0) rep.full_weight_degrees.push_back(k);
  }
  const int k_max = s.k_max();
  const auto populated = [&](const std::vector<int>& v) {
    if (v.size() < 3) return false;
    return std::any_of(v.begin(), v.end(), [&](int k) { return 4 * k >= 3 * k_max; });
  };
  if (!populated(rep.active_degrees)) {
    rep.verdict = IsotropicVerdict::NecessaryFailed;
  } else if (populated(rep.full_weight_degrees)) {
    rep.verdict = IsotropicVerdict::SufficientMet;
  } else {
    rep.verdict = IsotropicVerdict::Indeterminate;
  }
  return rep;
}

int jxi_of_point(const PolarPoint& p) {
  const int d = p.dim();
  int best = 2;
  for (int j = 2; j <= d - 1; ++j) {
    const double t = p.angle(j);
    if (std::abs(t) <= 1e-9 || std::abs(t - kPi) <= 1e-9) best = std::max(best, j);
  }
  return best;
}

}  // namespace spherekern
