// Command-line front end: evaluate harmonics and kernels, enumerate index
// families, classify Gram matrices, search for nullspace witnesses, sweep
// inequality certificates, and run decay-rate diagnostics.
//
// Exit codes: 0 = success / pass, 1 = a verdict or certificate failed,
// 2 = usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spherekern/analysis.hpp"
#include "spherekern/certificates.hpp"
#include "spherekern/gram.hpp"
#include "spherekern/harmonics.hpp"
#include "spherekern/point_io.hpp"
#include "spherekern/quadrature.hpp"
#include "spherekern/sampling.hpp"

using nlohmann::json;
using namespace spherekern;

namespace {

constexpr const char* kSchema = "spherekern/1";

enum class Format { Json, Csv };

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << text;
  }
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw std::runtime_error("unknown format '" + f + "' (expected json or csv)");
}

PolarPoint parse_point_literal(const std::string& text, int d) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::runtime_error("point literal must look like polar:t1,t2,... or cart:x1,x2,...");
  }
  const std::string kind = text.substr(0, colon);
  std::vector<double> vals;
  std::stringstream ss(text.substr(colon + 1));
  std::string part;
  while (std::getline(ss, part, ',')) vals.push_back(std::stod(part));
  if (kind == "polar") {
    if (static_cast<int>(vals.size()) != d - 1) {
      throw std::runtime_error("polar literal needs " + std::to_string(d - 1) + " angles");
    }
    return PolarPoint(vals);
  }
  if (kind == "cart") {
    if (static_cast<int>(vals.size()) != d) {
      throw std::runtime_error("cart literal needs " + std::to_string(d) + " coordinates");
    }
    return polar_from_cartesian(vals);
  }
  throw std::runtime_error("point literal must start with 'polar:' or 'cart:'");
}

MultiIndex parse_index_literal(const std::string& text) {
  std::vector<int> e;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
  MultiIndex a(e);
  a.require_admissible();
  return a;
}

json complex_json(const std::complex<double>& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json witness_json(const Eigen::VectorXcd& c) {
  std::vector<double> re, im;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    re.push_back(c[i].real());
    im.push_back(c[i].imag());
  }
  return json{{"re", re}, {"im", im}};
}

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json norm_constants_json(int d_max) {
  json a;
  for (int j = 2; j <= d_max - 1; ++j) {
    a["A_" + std::to_string(j)] = axis_norm_constant(j);
  }
  return a;
}

// ---------------------------------------------------------------- eval

struct EvalOpts {
  int d = 3;
  std::string index;
  std::vector<std::string> points;
  std::string scheme_file;
  std::vector<std::string> pair;
  std::string format = "json";
  std::string out;
};

int cmd_eval(const EvalOpts& o) {
  const Format fmt = parse_format(o.format);
  OutputTarget target{o.out};
  json config{{"command", "eval"}, {"format", o.format}};

  if (!o.scheme_file.empty()) {
    if (o.pair.size() != 2) {
      throw std::runtime_error("eval with --scheme needs --pair <point> <point>");
    }
    const CoefficientScheme s = CoefficientScheme::load_file(o.scheme_file);
    const PolarPoint p = parse_point_literal(o.pair[0], s.d());
    const PolarPoint q = parse_point_literal(o.pair[1], s.d());
    const std::complex<double> kpq = kernel_eval(s, p, q);
    const std::complex<double> kqp = kernel_eval(s, q, p);
    config["scheme"] = o.scheme_file;
    config["d"] = s.d();
    config["k_max"] = s.k_max();
    if (fmt == Format::Csv) {
      target.write("which,re,im\nK(p,q)," + csv_double(kpq.real()) + "," + csv_double(kpq.imag()) +
                   "\nK(q,p)," + csv_double(kqp.real()) + "," + csv_double(kqp.imag()) + "\n");
      return 0;
    }
    json js{{"schema", kSchema},
            {"config", config},
            {"kernel_pq", complex_json(kpq)},
            {"kernel_qp", complex_json(kqp)},
            {"hermitian_residual", std::abs(kpq - std::conj(kqp))}};
    target.write(js.dump(2) + "\n");
    return 0;
  }

  if (o.index.empty() || o.points.empty()) {
    throw std::runtime_error("eval needs either --scheme + --pair, or --index + --point");
  }
  const MultiIndex a = parse_index_literal(o.index);
  if (a.dim() != o.d) {
    throw std::runtime_error("--index length must be d-1 = " + std::to_string(o.d - 1));
  }
  config["d"] = o.d;
  config["index"] = a.entries();
  json values = json::array();
  std::string csv = "point,re,im\n";
  for (const std::string& lit : o.points) {
    const PolarPoint p = parse_point_literal(lit, o.d);
    const std::complex<double> v = eval_harmonic(o.d, a, p);
    values.push_back(json{{"point", lit}, {"value", complex_json(v)}});
    csv += lit + "," + csv_double(v.real()) + "," + csv_double(v.imag()) + "\n";
  }
  if (fmt == Format::Csv) {
    target.write(csv);
    return 0;
  }
  json js{{"schema", kSchema}, {"config", config}, {"values", values}};
  target.write(js.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- addition-test

struct AdditionOpts {
  std::vector<int> ds;
  int k_max = 20;
  int pairs = 50;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  double perturb = 0.0;
  std::string format = "json";
  std::string out;
};

int cmd_addition_test(const AdditionOpts& o) {
  const Format fmt = parse_format(o.format);
  OutputTarget target{o.out};
  std::vector<int> ds = o.ds;
  if (ds.empty()) ds = {3, 4, 5, 6};
  json results = json::array();
  double overall = 0.0;
  int dmax = 3;
  for (int d : ds) {
    dmax = std::max(dmax, d);
    const ManifoldSpec m = ManifoldSpec::sphere(d);
    const JacobiParams jp = m.jacobi();
    // 2*pairs points; pair i = (2i, 2i+1)
    const std::vector<PolarPoint> pts = random_sphere_points(d, 2 * o.pairs, o.seed);
    double worst = 0.0;
    for (int i = 0; i < o.pairs; ++i) {
      const PolarPoint& p = pts[static_cast<std::size_t>(2 * i)];
      const PolarPoint& q = pts[static_cast<std::size_t>(2 * i) + 1];
      HarmonicEvaluator ep(d, o.k_max, p);
      HarmonicEvaluator eq(d, o.k_max, q);
      const double t = kernel_argument(to_cartesian(p), to_cartesian(q), m);
      const std::vector<double> pk = jacobi_all(o.k_max, jp, t);
      for (int k = 0; k <= o.k_max; ++k) {
        std::complex<double> acc = 0.0;
        for_each_tau(d, k, [&](const MultiIndex& a) {
          acc += ep.eval(a) * std::conj(eq.eval(a));
          return true;
        });
        const double expect =
            (1.0 + o.perturb) * ck_constant(m, k) * pk[static_cast<std::size_t>(k)];
        const double rel = std::abs(acc - std::complex<double>(expect)) / std::abs(expect);
        worst = std::max(worst, rel);
      }
    }
    overall = std::max(overall, worst);
    results.push_back(json{{"d", d}, {"max_rel_error", worst}});
  }
  const bool passed = overall <= o.tol;
  if (fmt == Format::Csv) {
    std::string csv = "d,max_rel_error\n";
    for (const auto& r : results) {
      csv += std::to_string(r["d"].get<int>()) + "," + csv_double(r["max_rel_error"].get<double>()) +
             "\n";
    }
    target.write(csv);
  } else {
    json js{{"schema", kSchema},
            {"config",
             {{"command", "addition-test"},
              {"d", ds},
              {"k_max", o.k_max},
              {"pairs", o.pairs},
              {"seed", o.seed},
              {"tolerance", o.tol},
              {"perturb", o.perturb}}},
            {"normalization_constants", norm_constants_json(dmax)},
            {"results", results},
            {"max_rel_error", overall},
            {"passed", passed}};
    target.write(js.dump(2) + "\n");
  }
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------- tau

struct TauOpts {
  int d = 3;
  int k = 0;
  int jzero = 0;  // 0 = off
  std::string format = "json";
  std::string out;
};

int cmd_tau(const TauOpts& o) {
  const Format fmt = parse_format(o.format);
  OutputTarget target{o.out};
  const std::vector<MultiIndex> list =
      o.jzero > 0 ? enumerate_tau_jzero(o.d, o.k, o.jzero) : enumerate_tau(o.d, o.k);
  const std::uint64_t expect =
      o.jzero > 0 ? tau_jzero_count(o.d, o.k, o.jzero) : dim_harmonic(o.d, o.k);
  if (fmt == Format::Csv) {
    std::string csv;
    for (const MultiIndex& a : list) {
      for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (i) csv += ",";
        csv += std::to_string(a.entries()[i]);
      }
      csv += "\n";
    }
    target.write(csv);
    return 0;
  }
  json indices = json::array();
  for (const MultiIndex& a : list) indices.push_back(a.entries());
  json js{{"schema", kSchema},
          {"config", {{"command", "tau"}, {"d", o.d}, {"k", o.k}, {"jzero", o.jzero}}},
          {"count", list.size()},
          {"count_closed_form", expect},
          {"indices", indices}};
  target.write(js.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- gram / check-spd / witness

struct GramOpts {
  std::string scheme_file;
  std::string points_file;
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
};

json report_json(const GramReport& rep) {
  json js = rep.to_json();
  return js;
}

int cmd_gram(const GramOpts& o, bool with_matrix, bool verdict_gates_exit) {
  const Format fmt = parse_format(o.format);
  OutputTarget target{o.out};
  const CoefficientScheme s = CoefficientScheme::load_file(o.scheme_file);
  const PointSet ps = read_points_file(o.points_file);
  if (ps.d != s.d()) {
    throw std::runtime_error("point set dimension " + std::to_string(ps.d) +
                             " does not match scheme dimension " + std::to_string(s.d()));
  }
  const Eigen::MatrixXcd K = gram_matrix(s, ps.points);
  const GramReport rep = pd_verdict(K, s.k_max(), o.tol);
  json config{{"command", with_matrix ? "gram" : "check-spd"},
              {"scheme", o.scheme_file},
              {"points", o.points_file},
              {"n", ps.points.size()},
              {"tolerance", o.tol}};
  if (fmt == Format::Csv) {
    std::string csv = "key,value\n";
    csv += "n," + std::to_string(rep.n) + "\n";
    csv += "min_eigenvalue," + csv_double(rep.min_eigenvalue) + "\n";
    csv += "max_eigenvalue," + csv_double(rep.max_eigenvalue) + "\n";
    csv += "verdict," + verdict_name(rep.verdict) + "\n";
    if (with_matrix) {
      csv += "row,col,re,im\n";
      for (Eigen::Index i = 0; i < K.rows(); ++i) {
        for (Eigen::Index j2 = 0; j2 < K.cols(); ++j2) {
          csv += std::to_string(i) + "," + std::to_string(j2) + "," +
                 csv_double(K(i, j2).real()) + "," + csv_double(K(i, j2).imag()) + "\n";
        }
      }
    }
    target.write(csv);
  } else {
    json js{{"schema", kSchema}, {"config", config}, {"report", report_json(rep)}};
    if (with_matrix) {
      json re = json::array(), im = json::array();
      for (Eigen::Index i = 0; i < K.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index j2 = 0; j2 < K.cols(); ++j2) {
          rrow.push_back(K(i, j2).real());
          irow.push_back(K(i, j2).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
      }
      js["matrix"] = json{{"re", re}, {"im", im}};
    }
    target.write(js.dump(2) + "\n");
  }
  if (verdict_gates_exit) {
    return rep.verdict == PdVerdict::PositiveDefinite ? 0 : 1;
  }
  return 0;
}

int cmd_witness(const GramOpts& o) {
  const Format fmt = parse_format(o.format);
  OutputTarget target{o.out};
  const CoefficientScheme s = CoefficientScheme::load_file(o.scheme_file);
  const PointSet ps = read_points_file(o.points_file);
  if (ps.d != s.d()) {
    throw std::runtime_error("point set dimension does not match scheme dimension");
  }
  const std::optional<Eigen::VectorXcd> c = spd_witness_search(s, ps.points, o.tol);
  json js{{"schema", kSchema},
          {"config",
           {{"command", "witness"},
            {"scheme", o.scheme_file},
            {"points", o.points_file},
            {"tolerance", o.tol}}},
          {"witness_found", c.has_value()}};
  if (c) {
    js["witness"] = witness_json(*c);
    const Eigen::MatrixXcd K = gram_matrix(s, ps.points);
    js["quadratic_form"] = std::abs(((*c).adjoint() * K * (*c))(0, 0));
  }
  if (fmt == Format::Csv) {
    std::string csv = "witness_found," + std::string(c ? "1" : "0") + "\n";
    if (c) {
      csv += "entry,re,im\n";
      for (Eigen::Index i = 0; i < c->size(); ++i) {
        csv += std::to_string(i) + "," + csv_double((*c)[i].real()) + "," +
               csv_double((*c)[i].imag()) + "\n";
      }
    }
    target.write(csv);
  } else {
    target.write(js.dump(2) + "\n");
  }
  return c.has_value() ? 1 : 0;
}

// ---------------------------------------------------------------- certify / rates

struct CertifyOpts {
  std::string bound = "all";
  int m_max = 60;
  int n_max = 100;
  int l_max = 40;
  int j = 2;
  int d = 4;
  int k_max = 12;
  std::uint64_t seed = 1234;
  int n_points = 8;
  std::string scheme_file;  // for --bound rates
  std::string format = "json";
  std::string out;
};

struct RatesOpts {
  std::string scheme_file;
  int j = 1;
  bool weighted = false;
  std::string out;  // prefix; empty = stdout JSON
};

int emit_rates(const CoefficientScheme& s, int j, bool weighted, const std::string& out_prefix) {
  const RateCheckResult counts = corollary_rate_check(s, j);
  std::optional<RateCheckResult> wsum;
  if (weighted) wsum = weighted_complement_sum(s, j);
  json js{{"schema", kSchema},
          {"config",
           {{"command", "rates"},
            {"d", s.d()},
            {"k_max", s.k_max()},
            {"j", j},
            {"weighted", weighted}}},
          {"count_rate", counts.to_json()}};
  if (wsum) js["weighted_rate"] = wsum->to_json();
  js["positive"] = counts.positive && (!wsum || wsum->positive);
  if (!out_prefix.empty()) {
    {
      std::ofstream fe(out_prefix + "-even.csv");
      if (!fe) throw std::runtime_error("cannot write " + out_prefix + "-even.csv");
      counts.even.write_csv(fe);
    }
    {
      std::ofstream fo(out_prefix + "-odd.csv");
      if (!fo) throw std::runtime_error("cannot write " + out_prefix + "-odd.csv");
      counts.odd.write_csv(fo);
    }
    std::ofstream fj(out_prefix + ".json");
    if (!fj) throw std::runtime_error("cannot write " + out_prefix + ".json");
    fj << js.dump(2) << "\n";
  } else {
    std::cout << js.dump(2) << "\n";
  }
  return js["positive"].get<bool>() ? 0 : 1;
}

int cmd_certify(const CertifyOpts& o) {
  const Format fmt = parse_format(o.format);
  OutputTarget target{o.out};
  if (o.bound == "rates") {
    if (o.scheme_file.empty()) throw std::runtime_error("certify rates needs --scheme");
    const CoefficientScheme s = CoefficientScheme::load_file(o.scheme_file);
    return emit_rates(s, o.j, false, o.out);
  }
  std::vector<BoundCertificate> certs;
  if (o.bound == "lohofer" || o.bound == "all") certs.push_back(certify_lohofer(o.m_max));
  if (o.bound == "haagerup" || o.bound == "all") certs.push_back(certify_haagerup(o.n_max));
  if (o.bound == "ptilde" || o.bound == "all") certs.push_back(certify_ptilde(o.j, o.l_max));
  if (o.bound == "harmonic-product" || o.bound == "all") {
    certs.push_back(certify_harmonic_product(o.d, o.j, o.k_max, o.seed, o.n_points));
  }
  if (certs.empty()) {
    throw std::runtime_error("unknown bound '" + o.bound +
                             "' (expected lohofer, haagerup, ptilde, harmonic-product, rates, all)");
  }
  bool all_passed = true;
  for (const auto& c : certs) all_passed = all_passed && c.passed();
  if (fmt == Format::Csv) {
    std::string csv;
    for (const auto& c : certs) {
      csv += "# " + c.bound_name + "\n";
      std::ostringstream ss;
      c.write_csv(ss);
      csv += ss.str();
    }
    target.write(csv);
  } else {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(c.to_json());
    json js{{"schema", kSchema},
            {"config",
             {{"command", "certify"},
              {"bound", o.bound},
              {"m_max", o.m_max},
              {"n_max", o.n_max},
              {"l_max", o.l_max},
              {"j", o.j},
              {"d", o.d},
              {"k_max", o.k_max},
              {"seed", o.seed}}},
            {"certificates", arr},
            {"passed", all_passed}};
    target.write(js.dump(2) + "\n");
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-isotropic positive-definite kernels on spheres: evaluation, "
               "Gram classification, and asymptotic certificates"};
  app.require_subcommand(1);

  EvalOpts eo;
  auto* eval = app.add_subcommand("eval", "Evaluate a harmonic or a kernel pair");
  eval->add_option("--d", eo.d, "Sphere dimension d (points live on S^{d-1})");
  eval->add_option("--index", eo.index, "Multi-index a_1,...,a_{d-1}");
  eval->add_option("--point", eo.points, "Point literal polar:... or cart:... (repeatable)");
  eval->add_option("--scheme", eo.scheme_file, "Scheme JSON file (kernel mode)");
  eval->add_option("--pair", eo.pair, "Two point literals (kernel mode)")->expected(2);
  eval->add_option("--format", eo.format, "json|csv");
  eval->add_option("--out", eo.out, "Output path (default stdout)");

  AdditionOpts ao;
  auto* add = app.add_subcommand("addition-test", "Zonal-sum identity over seeded random pairs");
  add->add_option("--d", ao.ds, "Dimensions to test (repeatable; default 3 4 5 6)");
  add->add_option("--k-max", ao.k_max, "Largest degree");
  add->add_option("--pairs", ao.pairs, "Number of seeded point pairs");
  add->add_option("--seed", ao.seed, "RNG seed");
  add->add_option("--tol", ao.tol, "Relative error tolerance");
  add->add_option("--perturb", ao.perturb,
                  "Scale the expected constant by (1+eps); nonzero values must fail");
  add->add_option("--format", ao.format, "json|csv");
  add->add_option("--out", ao.out, "Output path");

  TauOpts to;
  auto* tau = app.add_subcommand("tau", "Enumerate the degree-k index family");
  tau->add_option("--d", to.d, "Sphere dimension")->required();
  tau->add_option("--k", to.k, "Degree")->required();
  tau->add_option("--jzero", to.jzero, "Restrict to indices with a_j = 0");
  tau->add_option("--format", to.format, "json|csv");
  tau->add_option("--out", to.out, "Output path");

  GramOpts go;
  auto* gram = app.add_subcommand("gram", "Kernel matrix and spectral report");
  gram->add_option("--scheme", go.scheme_file, "Scheme JSON file")->required();
  gram->add_option("--points", go.points_file, "Point-set CSV file")->required();
  gram->add_option("--tol", go.tol, "Verdict tolerance");
  gram->add_option("--format", go.format, "json|csv");
  gram->add_option("--out", go.out, "Output path");

  GramOpts co;
  auto* spd = app.add_subcommand("check-spd", "Classify the kernel matrix (exit 1 unless PD)");
  spd->add_option("--scheme", co.scheme_file, "Scheme JSON file")->required();
  spd->add_option("--points", co.points_file, "Point-set CSV file")->required();
  spd->add_option("--tol", co.tol, "Verdict tolerance");
  spd->add_option("--format", co.format, "json|csv");
  spd->add_option("--out", co.out, "Output path");

  GramOpts wo;
  auto* wit = app.add_subcommand("witness", "Nullspace witness search (exit 1 if found)");
  wit->add_option("--scheme", wo.scheme_file, "Scheme JSON file")->required();
  wit->add_option("--points", wo.points_file, "Point-set CSV file")->required();
  wit->add_option("--tol", wo.tol, "Singular-value threshold (relative)");
  wit->add_option("--format", wo.format, "json|csv");
  wit->add_option("--out", wo.out, "Output path");

  CertifyOpts ce;
  auto* cert = app.add_subcommand("certify", "Sweep an inequality over its default grid");
  cert->add_option("--bound", ce.bound, "lohofer|haagerup|ptilde|harmonic-product|rates|all");
  cert->add_option("--m-max", ce.m_max, "Largest degree (lohofer)");
  cert->add_option("--n-max", ce.n_max, "Largest degree (haagerup)");
  cert->add_option("--l-max", ce.l_max, "Largest degree (ptilde)");
  cert->add_option("--j", ce.j, "Axis (ptilde, harmonic-product, rates)");
  cert->add_option("--d", ce.d, "Dimension (harmonic-product)");
  cert->add_option("--k-max", ce.k_max, "Largest degree (harmonic-product)");
  cert->add_option("--seed", ce.seed, "Seed for grid points (harmonic-product)");
  cert->add_option("--points-n", ce.n_points, "Seeded point count (harmonic-product)");
  cert->add_option("--scheme", ce.scheme_file, "Scheme JSON (rates)");
  cert->add_option("--format", ce.format, "json|csv");
  cert->add_option("--out", ce.out, "Output path");

  RatesOpts ro;
  auto* rates = app.add_subcommand("rates", "Complement decay diagnostics for a scheme");
  rates->add_option("--scheme", ro.scheme_file, "Scheme JSON file")->required();
  rates->add_option("--j", ro.j, "Axis whose zero set must stay active")->required();
  rates->add_flag("--weighted", ro.weighted, "Also compute the sharper weighted sum");
  rates->add_option("--out", ro.out, "Output prefix (writes -even.csv, -odd.csv, .json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(eo);
    if (*add) return cmd_addition_test(ao);
    if (*tau) return cmd_tau(to);
    if (*gram) return cmd_gram(go, /*with_matrix=*/true, /*verdict_gates_exit=*/false);
    if (*spd) return cmd_gram(co, /*with_matrix=*/false, /*verdict_gates_exit=*/true);
    if (*wit) return cmd_witness(wo);
    if (*cert) return cmd_certify(ce);
    if (*rates) {
      const CoefficientScheme s = CoefficientScheme::load_file(ro.scheme_file);
      return emit_rates(s, ro.j, ro.weighted, ro.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
