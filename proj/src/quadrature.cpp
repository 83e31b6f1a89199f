#include "spherekern/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spherekern/special_functions.hpp"

namespace spherekern {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
}  // namespace

QuadratureRule gauss_jacobi_rule(int n, double g) {
  if (n < 1) throw std::domain_error("gauss_jacobi_rule: need at least one node");
  if (!(g > -1.0)) throw std::domain_error("gauss_jacobi_rule: weight exponent must exceed -1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    // Monic recurrence coefficient for the symmetric weight (1-x^2)^g.
    const double num = 4.0 * i * (i + g) * (i + g) * (i + 2.0 * g);
    const double den = (2.0 * i + 2.0 * g) * (2.0 * i + 2.0 * g) * (2.0 * i + 2.0 * g + 1.0) *
                       (2.0 * i + 2.0 * g - 1.0);
    sub[i - 1] = std::sqrt(num / den);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi_rule: eigensolver failed");
  }
  const double mu0 = std::exp((2.0 * g + 1.0) * kLn2 + 2.0 * log_gamma(g + 1.0) -
                              log_gamma(2.0 * g + 2.0));
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
    const double v = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v * v;
  }
  return rule;
}

SphereRule sphere_product_rule(int d, int max_degree) {
  if (d < 3) throw std::domain_error("sphere_product_rule: dimension must be >= 3");
  if (max_degree < 0) throw std::domain_error("sphere_product_rule: degree must be >= 0");

  const int n1 = 2 * max_degree + 2;  // resolves e^{i m theta} exactly for |m| <= 2*max_degree
  std::vector<QuadratureRule> axis;
  axis.reserve(static_cast<std::size_t>(d) - 2);
  for (int j = 2; j <= d - 1; ++j) {
    QuadratureRule r = gauss_jacobi_rule(max_degree + 2, 0.5 * (j - 2));
    // Normalize each axis to unit mass so the product rule integrates the
    // probability measure of the sphere.
    const double mass = std::exp((j - 1.0) * kLn2 + 2.0 * log_gamma(0.5 * j) -
                                 log_gamma(static_cast<double>(j)));
    for (double& w : r.weights) w /= mass;
    axis.push_back(std::move(r));
  }

  SphereRule rule;
  std::size_t total = static_cast<std::size_t>(n1);
  for (const auto& r : axis) total *= r.nodes.size();
  rule.points.reserve(total);
  rule.weights.reserve(total);

  std::vector<std::size_t> idx(static_cast<std::size_t>(d) - 2, 0);
  while (true) {
    double w_axes = 1.0;
    std::vector<double> theta(static_cast<std::size_t>(d) - 1);
    for (int j = 2; j <= d - 1; ++j) {
      const auto& r = axis[static_cast<std::size_t>(j) - 2];
      const std::size_t i = idx[static_cast<std::size_t>(j) - 2];
      theta[static_cast<std::size_t>(j) - 1] = std::acos(r.nodes[i]);
      w_axes *= r.weights[i];
    }
    for (int i1 = 0; i1 < n1; ++i1) {
      theta[0] = 2.0 * kPi * i1 / n1;
      rule.points.emplace_back(theta);
      rule.weights.push_back(w_axes / n1);
    }
    // odometer over the axis indices
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < axis[pos].nodes.size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return rule;
}

}  // namespace spherekern
