#include "spherekern/point_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spherekern {

namespace {
std::runtime_error parse_error(const std::string& src, int line, const std::string& what) {
  return std::runtime_error(src + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, ',')) {
    // trim surrounding whitespace
    const auto b = part.find_first_not_of(" \t\r");
    const auto e = part.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
  }
  return out;
}
}  // namespace

PointSet read_points(std::istream& in, const std::string& src) {
  PointSet ps;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      // header: "# d=<int>, repr=<polar|cart>"
      const auto dpos = line.find("d=");
      if (dpos == std::string::npos) {
        throw parse_error(src, lineno, "header must declare d=<int>");
      }
      try {
        ps.d = std::stoi(line.substr(dpos + 2));
      } catch (const std::exception&) {
        throw parse_error(src, lineno, "cannot parse dimension in header");
      }
      if (ps.d < 3) throw parse_error(src, lineno, "dimension must be >= 3");
      header_seen = true;
      continue;
    }
    if (!header_seen) {
      throw parse_error(src, lineno, "missing '# d=<int>, repr=...' header before data rows");
    }
    const std::vector<std::string> f = split_csv(line);
    if (f.empty()) continue;
    std::vector<double> vals;
    vals.reserve(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(f[i], &used));
        if (used != f[i].size()) throw std::invalid_argument(f[i]);
      } catch (const std::exception&) {
        throw parse_error(src, lineno, "cannot parse number '" + f[i] + "'");
      }
    }
    try {
      if (f[0] == "polar") {
        if (static_cast<int>(vals.size()) != ps.d - 1) {
          throw parse_error(src, lineno,
                            "polar row needs " + std::to_string(ps.d - 1) + " angles, got " +
                                std::to_string(vals.size()));
        }
        ps.points.emplace_back(vals);
      } else if (f[0] == "cart") {
        if (static_cast<int>(vals.size()) != ps.d) {
          throw parse_error(src, lineno,
                            "cart row needs " + std::to_string(ps.d) + " coordinates, got " +
                                std::to_string(vals.size()));
        }
        ps.points.push_back(polar_from_cartesian(vals));
      } else {
        throw parse_error(src, lineno, "row must start with 'polar' or 'cart', got '" + f[0] + "'");
      }
    } catch (const std::domain_error& e) {
      throw parse_error(src, lineno, e.what());
    }
  }
  if (!header_seen) throw std::runtime_error(src + ": empty point file (no header)");
  return ps;
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file: " + path);
  return read_points(in, path);
}

void write_points(std::ostream& out, const PointSet& ps) {
  out << "# d=" << ps.d << ", repr=polar\n";
  char buf[64];
  for (const PolarPoint& p : ps.points) {
    out << "polar";
    for (double t : p.theta) {
      std::snprintf(buf, sizeof(buf), "%.17g", t);
      out << "," << buf;
    }
    out << "\n";
  }
}

void write_points_file(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point file: " + path);
  write_points(out, ps);
}

}  // namespace spherekern
