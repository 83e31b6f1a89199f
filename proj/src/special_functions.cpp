#include "spherekern/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spherekern {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void check_jacobi_params(const JacobiParams& p) {
  if (!(p.a >= -0.5) || !(p.b >= -1.0)) {
    throw std::domain_error("jacobi_p: parameters must satisfy a >= -1/2, b >= -1, got a=" +
                            std::to_string(p.a) + ", b=" + std::to_string(p.b));
  }
}
}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
  }
  return std::lgamma(x);
}

std::vector<double> jacobi_all(int n, const JacobiParams& p, double x) {
  if (n < 0) throw std::domain_error("jacobi_all: degree must be >= 0");
  check_jacobi_params(p);
  if (std::abs(x) > 1.0) {
    throw std::domain_error("jacobi_all: argument outside [-1, 1]: " + std::to_string(x));
  }
  const double a = p.a, b = p.b;
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  v[0] = 1.0;
  if (n == 0) return v;
  v[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int m = 2; m <= n; ++m) {
    const double s = 2.0 * m + a + b;
    const double num = (s - 1.0) * ((s * (s - 2.0)) * x + a * a - b * b) * v[m - 1] -
                       2.0 * (m + a - 1.0) * (m + b - 1.0) * s * v[m - 2];
    v[m] = num / (2.0 * m * (m + a + b) * (s - 2.0));
  }
  return v;
}

double jacobi_p(int n, const JacobiParams& p, double x) {
  if (n < 0) throw std::domain_error("jacobi_p: degree must be >= 0");
  check_jacobi_params(p);
  if (std::abs(x) > 1.0) {
    throw std::domain_error("jacobi_p: argument outside [-1, 1]: " + std::to_string(x));
  }
  if (n == 0) return 1.0;
  const double a = p.a, b = p.b;
  double ym = 1.0;
  double y = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int m = 2; m <= n; ++m) {
    const double s = 2.0 * m + a + b;
    const double num = (s - 1.0) * ((s * (s - 2.0)) * x + a * a - b * b) * y -
                       2.0 * (m + a - 1.0) * (m + b - 1.0) * s * ym;
    ym = y;
    y = num / (2.0 * m * (m + a + b) * (s - 2.0));
  }
  return y;
}

double log_jacobi_at_one(int n, const JacobiParams& p) {
  if (n < 0) throw std::domain_error("log_jacobi_at_one: degree must be >= 0");
  check_jacobi_params(p);
  return log_gamma(n + p.a + 1.0) - log_gamma(n + 1.0) - log_gamma(p.a + 1.0);
}

double jacobi_at_one(int n, const JacobiParams& p) { return std::exp(log_jacobi_at_one(n, p)); }

double gegenbauer_c(int n, double lambda, double x) {
  if (n < 0) throw std::domain_error("gegenbauer_c: degree must be >= 0");
  if (!(lambda > 0.0)) {
    throw std::domain_error("gegenbauer_c: lambda must be positive, got " + std::to_string(lambda));
  }
  // C_n^{lambda} = [Gamma(2 lambda + n) Gamma(lambda + 1/2)] /
  //                [Gamma(2 lambda) Gamma(lambda + 1/2 + n)] * P_n^{(lambda-1/2, lambda-1/2)}
  const double scale = std::exp(log_gamma(2.0 * lambda + n) + log_gamma(lambda + 0.5) -
                                log_gamma(2.0 * lambda) - log_gamma(lambda + 0.5 + n));
  return scale * jacobi_p(n, {lambda - 0.5, lambda - 0.5}, x);
}

double legendre_neg_order(double nu, double mu, double x) {
  if (!(nu >= mu) || !(mu >= 0.0)) {
    throw std::domain_error("legendre_neg_order: need nu >= mu >= 0, got nu=" +
                            std::to_string(nu) + ", mu=" + std::to_string(mu));
  }
  const double diff = nu - mu;
  const int m = static_cast<int>(std::lround(diff));
  if (std::abs(diff - m) > 1e-9) {
    throw std::domain_error("legendre_neg_order: nu - mu must be a nonnegative integer, got " +
                            std::to_string(diff));
  }
  if (std::abs(x) >= 1.0) {
    throw std::domain_error("legendre_neg_order: argument must satisfy |x| < 1, got " +
                            std::to_string(x));
  }
  const double log_scale = log_gamma(diff + 1.0) - mu * kLn2 - log_gamma(nu + 1.0);
  return std::exp(log_scale) * std::pow(1.0 - x * x, 0.5 * mu) * jacobi_p(m, {mu, mu}, x);
}

double axis_norm_constant(int j) {
  if (j < 2) throw std::domain_error("axis_norm_constant: axis index must be >= 2");
  if (j == 2) return 2.0 * std::sqrt(kPi);
  return std::exp(0.5 * (0.5 * std::log(kPi) + log_gamma(0.5 * j) - log_gamma(0.5 * (j + 1))));
}

double ptilde(int j, int L, int l, double theta) {
  if (j < 2) throw std::domain_error("ptilde: axis index must be >= 2");
  if (L < 0 || std::abs(l) > L) {
    throw std::domain_error("ptilde: need 0 <= |l| <= L, got L=" + std::to_string(L) +
                            ", l=" + std::to_string(l));
  }
  if (l < 0 && j != 2) {
    throw std::domain_error("ptilde: negative order is only defined on the first polar axis (j=2)");
  }
  if (!(theta >= 0.0) || !(theta <= kPi)) {
    throw std::domain_error("ptilde: angle must lie in [0, pi], got " + std::to_string(theta));
  }
  double sign = 1.0;
  if (l < 0) {
    l = -l;
    if (l % 2 != 0) sign = -1.0;
  }
  const double half = 0.5 * (j - 2);
  const double mu = l + half;
  const double nu = L + half;
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
  // Fully cancelled log-space prefactor; the Ferrers (1-x^2)^{mu/2} combines
  // with the chart's sin^{(2-j)/2} factor into a plain (sin theta)^l.
  const double log_coef = std::log(axis_norm_constant(j)) + 0.5 * std::log(0.5 * (2.0 * L + j - 1.0)) +
                          0.5 * log_gamma(L + l + j - 1.0) + 0.5 * log_gamma(L - l + 1.0) -
                          mu * kLn2 - log_gamma(nu + 1.0);
  const double sl = (l == 0) ? 1.0 : std::pow(s, l);
  return sign * sl * std::exp(log_coef) * jacobi_p(L - l, {mu, mu}, x);
}

}  // namespace spherekern
