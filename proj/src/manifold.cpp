#include "spherekern/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spherekern {

namespace {
double unit_dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::domain_error("geodesic_distance: dimension mismatch");
  }
  double nx = 0.0, ny = 0.0, dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    nx += x[i] * x[i];
    ny += y[i] * y[i];
    dot += x[i] * y[i];
  }
  if (std::abs(std::sqrt(nx) - 1.0) > 1e-9 || std::abs(std::sqrt(ny) - 1.0) > 1e-9) {
    throw std::domain_error("geodesic_distance: inputs must be unit vectors (within 1e-9)");
  }
  return std::clamp(dot, -1.0, 1.0);
}
}  // namespace

ManifoldSpec::ManifoldSpec(Family f, int dim) : family(f), d(dim) {
  if (family == Family::Cayley) {
    if (dim != 0 && dim != 17) {
      throw std::domain_error("ManifoldSpec: the Cayley family is only defined for d = 17");
    }
    d = 17;
  }
  if (d < 2) throw std::domain_error("ManifoldSpec: dimension must be >= 2");
}

JacobiParams ManifoldSpec::jacobi() const {
  const double alpha = 0.5 * (d - 3);
  switch (family) {
    case Family::Sphere:
      return {alpha, alpha};
    case Family::RealProjective:
      return {alpha, -0.5};
    case Family::ComplexProjective:
      return {alpha, 0.0};
    case Family::QuaternionProjective:
      return {alpha, 1.0};
    case Family::Cayley:
      return {alpha, 3.0};
  }
  throw std::logic_error("ManifoldSpec: unknown family");
}

std::string ManifoldSpec::name() const {
  switch (family) {
    case Family::Sphere: return "sphere";
    case Family::RealProjective: return "real-projective";
    case Family::ComplexProjective: return "complex-projective";
    case Family::QuaternionProjective: return "quaternion-projective";
    case Family::Cayley: return "cayley";
  }
  return "?";
}

ManifoldSpec ManifoldSpec::parse(const std::string& name, int dim) {
  if (name == "sphere") return {Family::Sphere, dim};
  if (name == "real-projective") return {Family::RealProjective, dim};
  if (name == "complex-projective") return {Family::ComplexProjective, dim};
  if (name == "quaternion-projective") return {Family::QuaternionProjective, dim};
  if (name == "cayley") return {Family::Cayley, dim};
  throw std::domain_error("unknown manifold family: " + name);
}

double geodesic_distance(std::span<const double> x, std::span<const double> y,
                         const ManifoldSpec& m) {
  const double dot = unit_dot(x, y);
  if (m.is_sphere()) return std::acos(dot);
  return 2.0 * std::acos(std::min(std::abs(dot), 1.0));
}

double kernel_argument(std::span<const double> x, std::span<const double> y,
                       const ManifoldSpec& m) {
  const double dot = unit_dot(x, y);
  if (m.is_sphere()) return dot;
  // cos(2 arccos |dot|) = 2 dot^2 - 1
  return std::clamp(2.0 * dot * dot - 1.0, -1.0, 1.0);
}

}  // namespace spherekern
