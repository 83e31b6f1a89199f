// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written from closed forms or brute-force
// definitions, never by calling the code under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Explicit low-degree Jacobi polynomials.
inline double jacobi_p0(double, double, double) { return 1.0; }
inline double jacobi_p1(double a, double b, double x) {
  return (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
}
inline double jacobi_p2(double a, double b, double x) {
  const double u = x - 1.0;
  return 0.125 * (a + b + 3.0) * (a + b + 4.0) * u * u + 0.5 * (a + 2.0) * (a + b + 3.0) * u +
         0.5 * (a + 1.0) * (a + 2.0);
}

// Legendre P_2, P_3 (Jacobi with a = b = 0).
inline double legendre_p2(double x) { return 0.5 * (3.0 * x * x - 1.0); }
inline double legendre_p3(double x) { return 0.5 * (5.0 * x * x * x - 3.0 * x); }

// Chebyshev U_n = Gegenbauer with lambda = 1: U_n(cos t) = sin((n+1)t)/sin(t).
inline double chebyshev_u(int n, double theta) {
  return std::sin((n + 1) * theta) / std::sin(theta);
}

// P_k^{(a,a)}(1) = Gamma(k+a+1) / (Gamma(k+1) Gamma(a+1)) via lgamma.
inline double jacobi_at_one(int k, double a) {
  return std::exp(std::lgamma(k + a + 1.0) - std::lgamma(k + 1.0) - std::lgamma(a + 1.0));
}

// dim H_k(S^{d-1}) by a direct product formula.
inline double dim_harmonic(int d, int k) {
  if (k == 0) return 1.0;
  double v = static_cast<double>(2 * k + d - 2);
  for (int i = 1; i <= d - 3; ++i) v *= static_cast<double>(k + i);
  return v / factorial(d - 2);
}

// Brute-force enumeration of {|a_1| <= a_2 <= ... <= a_{d-1} = k}: sweep the
// full box [-k,k] x [0,k]^{d-2} and filter by the chain condition.  Slow but
// definition-literal, and independent of the library's lexicographic walker.
inline std::vector<std::vector<int>> enumerate_tau_brute(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(d) - 1);
  const auto admissible = [&]() {
    if (e.back() != k) return false;
    if (std::abs(e[0]) > ((d > 2) ? e[1] : k)) return false;
    for (std::size_t i = 1; i + 1 < e.size(); ++i) {
      if (e[i] > e[i + 1]) return false;
    }
    return true;
  };
  std::vector<int> cursor(static_cast<std::size_t>(d) - 1, 0);
  cursor[0] = -k;
  while (true) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = cursor[i];
    if (admissible()) out.push_back(e);
    // odometer over the box
    std::size_t pos = 0;
    while (pos < cursor.size()) {
      ++cursor[pos];
      if (cursor[pos] <= k) break;
      cursor[pos] = (pos == 0) ? -k : 0;
      ++pos;
    }
    if (pos == cursor.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Frozen reference values.
inline constexpr double kSqrt2Pi = 2.5066282746310002;      // sqrt(2 pi)
inline constexpr double kTwoOverSqrt3 = 1.1547005383792517;  // 2/sqrt(3)
inline constexpr double kSqrt3 = 1.7320508075688772;
inline constexpr double kSqrt3Over2 = 1.2247448713915890;  // sqrt(3/2)
inline constexpr double kA2 = 3.5449077018110318;          // 2 sqrt(pi)
inline constexpr double kA3 = 1.2533141373155003;          // sqrt(pi/2)
inline constexpr double kA4 = 1.1547005383792515;          // sqrt(4/3)

// Degree-1 harmonics on S^2 in polar angles (t1 azimuth, t2 from the pole):
//   Y_{(0,1)} = sqrt(3) cos t2,  Y_{(1,1)} = sqrt(3/2) sin t2 e^{i t1}.
inline std::complex<double> y01_s2(double t2) { return kSqrt3 * std::cos(t2); }
inline std::complex<double> y11_s2(double t1, double t2) {
  return kSqrt3Over2 * std::sin(t2) * std::exp(std::complex<double>(0.0, t1));
}

}  // namespace oracle
