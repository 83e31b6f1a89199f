#include "spherekern/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spherekern {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
}  // namespace

double log_ck_constant(const ManifoldSpec& m, int k) {
  if (k < 0) throw std::domain_error("ck_constant: degree must be >= 0");
  if (k == 0) return 0.0;
  const JacobiParams p = m.jacobi();
  return log_gamma(p.b + 1.0) + std::log(2.0 * k + p.a + p.b + 1.0) +
         log_gamma(k + p.a + p.b + 1.0) - log_gamma(p.a + p.b + 2.0) - log_gamma(k + p.b + 1.0);
}

double ck_constant(const ManifoldSpec& m, int k) {
  if (k == 0) return 1.0;
  return std::exp(log_ck_constant(m, k));
}

HarmonicEvaluator::HarmonicEvaluator(int d, int k_max, const PolarPoint& p)
    : d_(d), k_max_(k_max), p_(p) {
  if (d < 3) throw std::domain_error("HarmonicEvaluator: dimension must be >= 3");
  if (k_max < 0) throw std::domain_error("HarmonicEvaluator: k_max must be >= 0");
  if (p.dim() != d) {
    throw std::domain_error("HarmonicEvaluator: point dimension mismatch (expected " +
                            std::to_string(d) + ", got " + std::to_string(p.dim()) + ")");
  }

  // lgamma(n/2) lookup: every Gamma argument in the ptilde prefactor is a
  // positive half-integer bounded by 2*k_max + d, so index 2*arg fits below.
  const int half_max = 4 * k_max + 2 * d + 4;
  std::vector<double> lg_half(static_cast<std::size_t>(half_max) + 1, 0.0);
  for (int n = 1; n <= half_max; ++n) lg_half[static_cast<std::size_t>(n)] = std::lgamma(0.5 * n);
  const auto lg = [&](double v) {  // v is a half-integer >= 1/2
    return lg_half[static_cast<std::size_t>(std::lround(2.0 * v))];
  };

  axis_.resize(static_cast<std::size_t>(d) - 2);
  for (int j = 2; j <= d - 1; ++j) {
    std::vector<double>& table = axis_[static_cast<std::size_t>(j) - 2];
    table.assign(tri(k_max, k_max) + 1, 0.0);
    const double theta = p_.angle(j);
    double s, x;
    if (theta == 0.0) {
      s = 0.0;
      x = 1.0;
    } else if (theta == kPi) {
      s = 0.0;
      x = -1.0;
    } else {
      s = std::sin(theta);
      x = std::cos(theta);
    }
    const double log_aj = std::log(axis_norm_constant(j));
    double sl = 1.0;  // s^l
    for (int l = 0; l <= k_max; ++l) {
      const double mu = l + 0.5 * (j - 2);
      // One recurrence pass over P_m^{(mu,mu)} gives every degree L = l + m.
      double pm1 = 0.0, pm = 1.0;
      for (int m = 0; m <= k_max - l; ++m) {
        if (m >= 1) {
          double next;
          if (m == 1) {
            next = (mu + 1.0) * x;
          } else {
            const double t2 = 2.0 * m + 2.0 * mu;
            const double num = (t2 - 1.0) * t2 * (t2 - 2.0) * x * pm -
                               2.0 * (m + mu - 1.0) * (m + mu - 1.0) * t2 * pm1;
            next = num / (2.0 * m * (m + 2.0 * mu) * (t2 - 2.0));
          }
          pm1 = pm;
          pm = next;
        }
        const int L = l + m;
        const double nu = L + 0.5 * (j - 2);
        const double log_coef = log_aj + 0.5 * std::log(0.5 * (2.0 * L + j - 1.0)) +
                                0.5 * lg(L + l + j - 1.0) + 0.5 * lg(L - l + 1.0) - mu * kLn2 -
                                lg(nu + 1.0);
        table[tri(L, l)] = sl * std::exp(log_coef) * pm;
      }
      sl *= s;
    }
  }

  phase_.resize(2 * static_cast<std::size_t>(k_max) + 1);
  const double t1 = p_.angle(1);
  const double inv = 1.0 / std::sqrt(2.0 * kPi);
  for (int a1 = -k_max; a1 <= k_max; ++a1) {
    phase_[static_cast<std::size_t>(a1 + k_max)] =
        std::polar(inv, a1 * t1);
  }
}

std::complex<double> HarmonicEvaluator::eval(const MultiIndex& a) const {
  if (a.dim() != d_) {
    throw std::domain_error("HarmonicEvaluator: multi-index dimension mismatch");
  }
  if (a.degree() > k_max_) {
    throw std::domain_error("HarmonicEvaluator: degree exceeds cached k_max");
  }
  const int a1 = a.component(1);
  double mag = 1.0;
  int prev = std::abs(a1);
  double sign = (a1 < 0 && (prev % 2) != 0) ? -1.0 : 1.0;
  for (int j = 2; j <= d_ - 1; ++j) {
    const int aj = a.component(j);
    mag *= axis_[static_cast<std::size_t>(j) - 2][tri(aj, prev)];
    prev = aj;
  }
  return sign * mag * phase_[static_cast<std::size_t>(a1 + k_max_)];
}

std::complex<double> eval_harmonic(int d, const MultiIndex& a, const PolarPoint& p) {
  a.require_admissible();
  if (a.dim() != d) throw std::domain_error("eval_harmonic: multi-index dimension mismatch");
  HarmonicEvaluator ev(d, a.degree(), p);
  return ev.eval(a);
}

std::complex<double> zonal_sum(int d, int k, const PolarPoint& p, const PolarPoint& q) {
  HarmonicEvaluator ep(d, k, p);
  HarmonicEvaluator eq(d, k, q);
  std::complex<double> acc = 0.0;
  for_each_tau(d, k, [&](const MultiIndex& a) {
    acc += ep.eval(a) * std::conj(eq.eval(a));
    return true;
  });
  return acc;
}

}  // namespace spherekern
