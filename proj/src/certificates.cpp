#include "spherekern/certificates.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "spherekern/harmonics.hpp"
#include "spherekern/multi_index.hpp"
#include "spherekern/sampling.hpp"
#include "spherekern/special_functions.hpp"

namespace spherekern {

namespace {
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void record(BoundCertificate& cert, const std::string& where, double lhs, double rhs) {
  ++cert.points_checked;
  const double ratio = (rhs > 0.0) ? lhs / rhs : (lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  if (ratio > cert.max_ratio) cert.max_ratio = ratio;
  if (lhs > rhs) cert.violations.push_back({where, lhs, rhs});
}
}  // namespace

nlohmann::json BoundCertificate::to_json() const {
  nlohmann::json js;
  js["bound"] = bound_name;
  js["grid"] = grid_description;
  js["points_checked"] = points_checked;
  js["points_skipped"] = points_skipped;
  js["max_ratio"] = max_ratio;
  js["stated_constant"] = stated_constant;
  js["empirical_constant"] = empirical_constant;
  js["violations"] = nlohmann::json::array();
  for (const auto& v : violations) {
    js["violations"].push_back({{"where", v.where}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  js["passed"] = passed();
  if (!profile.empty()) {
    nlohmann::json pr = nlohmann::json::array();
    for (const auto& [p, v] : profile) pr.push_back({p, v});
    js["profile"] = pr;
    js["profile_name"] = profile_name;
  }
  js["notes"] = notes;
  return js;
}

void BoundCertificate::write_csv(std::ostream& os) const {
  os << "parameter,value\n";
  char buf[64];
  for (const auto& [p, v] : profile) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", p, v);
    os << buf << "\n";
  }
}

std::vector<double> default_theta_grid() {
  std::vector<double> g;
  g.reserve(39);
  for (int i = 1; i <= 39; ++i) g.push_back(kPi * i / 40.0);
  return g;
}

BoundCertificate certify_lohofer(int m_max, const std::vector<double>& thetas) {
  if (m_max < 1) throw std::domain_error("certify_lohofer: need at least degree 1");
  BoundCertificate cert;
  cert.bound_name = "lohofer";
  cert.grid_description = "degrees 1.." + std::to_string(m_max) + ", all orders |n| <= m, " +
                          std::to_string(thetas.size()) + " angles";
  const double k0 = std::tgamma(0.25) / kPi;
  cert.stated_constant = k0;
  cert.notes =
      "The order n enters the Gamma-ratio factor sqrt(Gamma(m+n+1)/Gamma(m-n+1)) with its "
      "sign; the printed form of the bound has Gamma(n-m+1) in the denominator, which poles "
      "for n < m and cannot be what is meant.  Evaluated with Gamma(m-n+1).";
  cert.profile_name = "empirical constant per angle";

  for (double theta : thetas) {
    const double x = std::cos(theta);
    const double st = std::sin(theta);
    double local_max = 0.0;  // max of lhs / (rhs / k0), i.e. smallest working constant
    for (int a = 0; a <= m_max; ++a) {
      // One recurrence pass gives P_{m-a}^{(a,a)}(x) for every degree m >= a.
      const std::vector<double> jac =
          jacobi_all(m_max - a, {static_cast<double>(a), static_cast<double>(a)}, x);
      for (int m = std::max(a, 1); m <= m_max; ++m) {
        const double p_neg = std::exp(log_gamma(m - a + 1.0) - a * std::numbers::ln2 -
                                      log_gamma(m + 1.0)) *
                             std::pow(1.0 - x * x, 0.5 * a) * jac[static_cast<std::size_t>(m - a)];
        const double shape = std::pow(st, -0.25) * std::pow(static_cast<double>(m), -0.25);
        // n = +a
        {
          const double lhs =
              std::abs(p_neg) * std::exp(log_gamma(m + a + 1.0) - log_gamma(m - a + 1.0));
          const double gr = std::exp(0.5 * (log_gamma(m + a + 1.0) - log_gamma(m - a + 1.0)));
          const double rhs = k0 * shape * gr;
          record(cert, "m=" + std::to_string(m) + " n=" + std::to_string(a) + " theta=" + fmt(theta),
                 lhs, rhs);
          local_max = std::max(local_max, lhs / (shape * gr));
        }
        // n = -a (distinct only for a >= 1)
        if (a >= 1) {
          const double lhs = std::abs(p_neg);
          const double gr = std::exp(0.5 * (log_gamma(m - a + 1.0) - log_gamma(m + a + 1.0)));
          const double rhs = k0 * shape * gr;
          record(cert, "m=" + std::to_string(m) + " n=-" + std::to_string(a) +
                           " theta=" + fmt(theta),
                 lhs, rhs);
          local_max = std::max(local_max, lhs / (shape * gr));
        }
      }
    }
    cert.profile.emplace_back(theta, local_max);
    cert.empirical_constant = std::max(cert.empirical_constant, local_max);
  }
  return cert;
}

BoundCertificate certify_haagerup(int n_max, const std::vector<double>& a_values, int x_points) {
  if (n_max < 0 || x_points < 2) {
    throw std::domain_error("certify_haagerup: need n_max >= 0 and at least two grid points");
  }
  BoundCertificate cert;
  cert.bound_name = "haagerup-jacobi";
  cert.grid_description = "degrees 0.." + std::to_string(n_max) + ", " +
                          std::to_string(a_values.size()) + " parameter values, " +
                          std::to_string(x_points) + " abscissae";
  cert.stated_constant = 12.0;
  cert.profile_name = "empirical constant per parameter";
  for (double a : a_values) {
    if (!(a >= -0.5)) {
      throw std::domain_error("certify_haagerup: parameter must satisfy a >= -1/2");
    }
    // rhs shape per degree, without the constant
    std::vector<double> shape(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
      shape[static_cast<std::size_t>(n)] =
          std::exp(a * std::numbers::ln2 + log_gamma(n + a + 1.0) - 0.5 * log_gamma(n + 1.0) -
                   0.5 * log_gamma(n + 2.0 * a + 1.0)) *
          std::pow(2.0 * n + 2.0 * a + 1.0, -0.25);
    }
    double local_max = 0.0;
    for (int ix = 0; ix < x_points; ++ix) {
      const double x = -1.0 + 2.0 * ix / (x_points - 1.0);
      const double envelope = std::pow(std::max(0.0, 1.0 - x * x), 0.5 * a + 0.25);
      const std::vector<double> jac = jacobi_all(n_max, {a, a}, x);
      for (int n = 0; n <= n_max; ++n) {
        const double lhs = envelope * std::abs(jac[static_cast<std::size_t>(n)]);
        const double rhs = 12.0 * shape[static_cast<std::size_t>(n)];
        record(cert, "a=" + fmt(a) + " n=" + std::to_string(n) + " x=" + fmt(x), lhs, rhs);
        local_max = std::max(local_max, lhs / shape[static_cast<std::size_t>(n)]);
      }
    }
    cert.profile.emplace_back(a, local_max);
    cert.empirical_constant = std::max(cert.empirical_constant, local_max);
  }
  return cert;
}

BoundCertificate certify_ptilde(int j, int L_max, const std::vector<double>& thetas) {
  if (j < 2) throw std::domain_error("certify_ptilde: axis index must be >= 2");
  if (L_max < 0) throw std::domain_error("certify_ptilde: L_max must be >= 0");
  BoundCertificate cert;
  cert.bound_name = "ptilde-quarter-power";
  cert.grid_description = "axis j=" + std::to_string(j) + ", degrees 0.." + std::to_string(L_max) +
                          ", orders 0..L, " + std::to_string(thetas.size() + 2) +
                          " angles (endpoints included)";
  const double aj = axis_norm_constant(j);
  cert.stated_constant = 12.0;
  cert.profile_name = "empirical C_j per angle";
  std::vector<double> grid = thetas;
  grid.insert(grid.begin(), 0.0);
  grid.push_back(kPi);
  for (double theta : grid) {
    const double st = (theta == 0.0 || theta == kPi) ? 0.0 : std::sin(theta);
    const double cj = aj * 12.0 / std::numbers::sqrt2 *
                      ((st == 0.0) ? std::numeric_limits<double>::infinity()
                                   : std::pow(st, -0.5 * (j - 1)));
    double cj_observed = 0.0;   // max of lhs / (2L+j-1)^{1/4}, the empirical C_j(theta)
    double c_needed = 0.0;      // smallest constant replacing 12 at this angle
    for (int L = 0; L <= L_max; ++L) {
      for (int l = 0; l <= L; ++l) {
        const double lhs = std::abs(ptilde(j, L, l, theta));
        const double quarter = std::pow(2.0 * L + j - 1.0, 0.25);
        const double rhs = cj * quarter;
        record(cert, "L=" + std::to_string(L) + " l=" + std::to_string(l) + " theta=" + fmt(theta),
               lhs, rhs);
        cj_observed = std::max(cj_observed, lhs / quarter);
        if (st > 0.0) c_needed = std::max(c_needed, 12.0 * lhs / rhs);
      }
    }
    if (st > 0.0) {
      cert.profile.emplace_back(theta, cj_observed);
      cert.empirical_constant = std::max(cert.empirical_constant, c_needed);
    }
  }
  return cert;
}

BoundCertificate certify_harmonic_product(int d, int j, int k_max, std::uint64_t seed,
                                          int n_points) {
  if (d < 3) throw std::domain_error("certify_harmonic_product: dimension must be >= 3");
  if (j < 1 || j > d - 2) {
    throw std::domain_error("certify_harmonic_product: need 1 <= j <= d-2");
  }
  if (k_max < 0 || n_points < 1) {
    throw std::domain_error("certify_harmonic_product: bad grid parameters");
  }
  BoundCertificate cert;
  cert.bound_name = "harmonic-product";
  cert.grid_description = "d=" + std::to_string(d) + ", split axis j=" + std::to_string(j) +
                          ", degrees 0.." + std::to_string(k_max) + ", " +
                          std::to_string(n_points) + " seeded points + 2 structured";
  cert.stated_constant = 12.0;
  cert.profile_name = "D(xi) per point";
  cert.notes =
      "Also certifies the universal prefix bound |partial_j| <= sqrt(dim_harmonic(j+1, a_j)).";

  std::vector<PolarPoint> pts = random_sphere_points(d, n_points, seed);
  {
    // Structured extras: one pole-aligned point (singular when j < d-1) and
    // one point pushed near an axis endpoint.
    std::vector<double> t(static_cast<std::size_t>(d) - 1, 0.0);
    pts.emplace_back(t);  // the pole: every theta_l = 0
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (i == 0) ? 0.5 : kPi / 2;
    t.back() = 1e-3;  // nearly singular on the last axis, but not exactly
    pts.emplace_back(t);
  }

  for (std::size_t ip = 0; ip < pts.size(); ++ip) {
    const PolarPoint& p = pts[ip];
    // D(xi) needs every theta_l, l > j, away from the chart endpoints.
    bool singular = false;
    double dxi = 1.0;
    for (int l = j + 1; l <= d - 1; ++l) {
      const double t = p.angle(l);
      const double st = std::sin(t);
      if (t <= 1e-9 || t >= kPi - 1e-9 || st <= 0.0) {
        singular = true;
        break;
      }
      dxi *= axis_norm_constant(l) * 12.0 / std::numbers::sqrt2 * std::pow(st, -0.5 * (l - 1));
    }
    if (singular) {
      ++cert.points_skipped;
      continue;
    }
    cert.profile.emplace_back(static_cast<double>(ip), dxi);
    HarmonicEvaluator ev(d, k_max, p);
    for (int k = 0; k <= k_max; ++k) {
      for_each_tau(d, k, [&](const MultiIndex& a) {
        const double lhs = std::abs(ev.eval(a));
        const int kj = (j == 1) ? std::abs(a.component(1)) : a.component(j);
        double rhs = dxi * std::sqrt(static_cast<double>(dim_harmonic(j + 1, kj)));
        for (int l = j + 1; l <= d - 1; ++l) {
          rhs *= std::pow(2.0 * a.component(l) + l - 1.0, 0.25);
        }
        record(cert, "point=" + std::to_string(ip) + " alpha=" + a.str(), lhs, rhs);
        return true;
      });
    }
    // Universal prefix bound: |(1/sqrt(2 pi)) e^{i a_1 t_1} prod_{i=2}^{j}
    // ptilde(i, a_i, a_{i-1}, t_i)| <= sqrt(dim_harmonic(j+1, a_j)).
    if (j == 1) {
      const double mag = 1.0 / std::sqrt(2.0 * kPi);
      for (int m = 0; m <= k_max; ++m) {
        const double rhs = std::sqrt(static_cast<double>(dim_harmonic(2, m)));
        record(cert, "point=" + std::to_string(ip) + " prefix=(" + std::to_string(m) + ")", mag,
               rhs);
      }
    } else {
      for (int m = 0; m <= k_max; ++m) {
        for_each_tau(j + 1, m, [&](const MultiIndex& pre) {
          double mag = 1.0 / std::sqrt(2.0 * kPi);
          int prev = std::abs(pre.component(1));
          for (int i = 2; i <= j; ++i) {
            mag *= std::abs(ptilde(i, pre.component(i), prev, p.angle(i)));
            prev = pre.component(i);
          }
          const double rhs = std::sqrt(static_cast<double>(dim_harmonic(j + 1, pre.component(j))));
          record(cert, "point=" + std::to_string(ip) + " prefix=" + pre.str(), mag, rhs);
          return true;
        });
      }
    }
  }
  cert.empirical_constant = cert.max_ratio * 12.0;
  return cert;
}

}  // namespace spherekern
