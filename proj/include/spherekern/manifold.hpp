#pragma once

#include <span>
#include <string>

#include "spherekern/special_functions.hpp"

namespace spherekern {

// The five compact two-point homogeneous families.  Points of the sphere and
// the real projective space are unit vectors in R^d; the remaining families
// are supported through their Jacobi parameter pair and the cosine argument
// of isotropic kernel evaluation.
enum class Family {
  Sphere,
  RealProjective,
  ComplexProjective,
  QuaternionProjective,
  Cayley,
};

struct ManifoldSpec {
  Family family = Family::Sphere;
  int d = 3;  // ambient dimension of the unit-vector model

  ManifoldSpec() = default;
  ManifoldSpec(Family f, int dim);

  static ManifoldSpec sphere(int dim) { return {Family::Sphere, dim}; }

  bool is_sphere() const { return family == Family::Sphere; }
  bool is_projective() const { return family != Family::Sphere; }

  // Jacobi parameters (alpha, beta) attached to the family:
  //   alpha = (d-3)/2 throughout; beta = (d-3)/2, -1/2, 0, 1, 3 for the
  //   sphere and the real/complex/quaternionic/Cayley projective families.
  JacobiParams jacobi() const;

  std::string name() const;
  static ManifoldSpec parse(const std::string& name, int dim);
};

// Geodesic distance between unit vectors, normalized to [0, pi]:
//   sphere:      arccos <x, y>
//   projective:  2 arccos |<x, y>|
// Inputs must be unit vectors to within 1e-9.
double geodesic_distance(std::span<const double> x, std::span<const double> y,
                         const ManifoldSpec& m);

// cos of the geodesic distance argument fed to the Jacobi expansion.
double kernel_argument(std::span<const double> x, std::span<const double> y,
                       const ManifoldSpec& m);

}  // namespace spherekern
