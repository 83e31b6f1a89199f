#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spherekern/polar.hpp"

namespace spherekern {

// Point-set CSV:
//   # d=<int>, repr=<polar|cart>
//   polar,theta_1,...,theta_{d-1}
//   cart,x_1,...,x_d
// Rows carry their own representation tag; cart rows must be unit vectors to
// within 1e-9 and are converted to polar on load.
struct PointSet {
  int d = 0;
  std::vector<PolarPoint> points;
};

PointSet read_points(std::istream& in, const std::string& source_name = "<stream>");
PointSet read_points_file(const std::string& path);

void write_points(std::ostream& out, const PointSet& ps);
void write_points_file(const std::string& path, const PointSet& ps);

}  // namespace spherekern
