#include "spherekern/gram.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spherekern/special_functions.hpp"

namespace spherekern {

std::string verdict_name(PdVerdict v) {
  switch (v) {
    case PdVerdict::PositiveDefinite: return "positive-definite";
    case PdVerdict::PositiveSemiDefiniteDegenerate: return "degenerate";
    case PdVerdict::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {
// Deterministic global phase: rotate so the largest-magnitude entry is real
// and positive.  Keeps CLI output byte-stable across runs.
void normalize_phase(Eigen::VectorXcd& c) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double m = std::abs(c[i]);
    if (m > best_mag + 1e-15) {
      best_mag = m;
      best = i;
    }
  }
  if (best_mag <= 0.0) return;
  const std::complex<double> rot = std::conj(c[best]) / best_mag;
  c *= rot;
  c[best] = std::complex<double>(std::abs(c[best]), 0.0);
}

void check_no_duplicates(const std::vector<PolarPoint>& pts) {
  const ManifoldSpec sphere = ManifoldSpec::sphere(pts.empty() ? 3 : pts[0].dim());
  std::vector<std::vector<double>> cart;
  cart.reserve(pts.size());
  for (const auto& p : pts) cart.push_back(to_cartesian(p));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (geodesic_distance(cart[i], cart[j], sphere) <= 1e-9) {
        throw std::domain_error("gram_matrix: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide (geodesic distance <= 1e-9)");
      }
    }
  }
}
}  // namespace

nlohmann::json GramReport::to_json() const {
  nlohmann::json js;
  js["n"] = n;
  js["min_eigenvalue"] = min_eigenvalue;
  js["max_eigenvalue"] = max_eigenvalue;
  js["verdict"] = verdict_name(verdict);
  js["truncation_k_max"] = truncation_k_max;
  js["tolerance"] = tolerance;
  if (witness) {
    nlohmann::json w;
    std::vector<double> re, im;
    for (Eigen::Index i = 0; i < witness->size(); ++i) {
      re.push_back((*witness)[i].real());
      im.push_back((*witness)[i].imag());
    }
    w["re"] = re;
    w["im"] = im;
    js["witness"] = w;
    js["witness_quadratic_form"] = witness_quadratic_form;
  }
  return js;
}

std::complex<double> kernel_eval(const CoefficientScheme& s, const PolarPoint& p,
                                 const PolarPoint& q) {
  HarmonicEvaluator ep(s.d(), s.k_max(), p);
  HarmonicEvaluator eq(s.d(), s.k_max(), q);
  std::complex<double> acc = 0.0;
  for (int k : s.domain_degrees()) {
    s.for_each_active(k, [&](const MultiIndex& a) {
      acc += s.weight(a) * ep.eval(a) * std::conj(eq.eval(a));
    });
  }
  return acc;
}

double isotropic_kernel_eval(const std::vector<double>& b, const ManifoldSpec& m, double t) {
  if (b.empty()) return 0.0;
  if (std::abs(t) > 1.0) {
    throw std::domain_error("isotropic_kernel_eval: cosine argument outside [-1, 1]");
  }
  const int kmax = static_cast<int>(b.size()) - 1;
  const std::vector<double> pk = jacobi_all(kmax, m.jacobi(), t);
  double acc = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    acc += b[static_cast<std::size_t>(k)] * ck_constant(m, k) * pk[static_cast<std::size_t>(k)];
  }
  return acc;
}

Eigen::MatrixXcd collocation_matrix(const CoefficientScheme& s,
                                    const std::vector<PolarPoint>& pts) {
  std::vector<MultiIndex> rows;
  for (int k : s.domain_degrees()) {
    s.for_each_active(k, [&](const MultiIndex& a) { rows.push_back(a); });
  }
  Eigen::MatrixXcd B(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t c = 0; c < pts.size(); ++c) {
    HarmonicEvaluator ev(s.d(), s.k_max(), pts[c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      B(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = ev.eval(rows[r]);
    }
  }
  return B;
}

Eigen::MatrixXcd gram_matrix(const CoefficientScheme& s, const std::vector<PolarPoint>& pts) {
  for (const auto& p : pts) {
    if (p.dim() != s.d()) {
      throw std::domain_error("gram_matrix: point dimension does not match scheme dimension");
    }
  }
  check_no_duplicates(pts);
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXcd K(n, n);
  std::vector<HarmonicEvaluator> evs;
  evs.reserve(pts.size());
  for (const auto& p : pts) evs.emplace_back(s.d(), s.k_max(), p);
  std::vector<MultiIndex> rows;
  std::vector<double> w;
  for (int k : s.domain_degrees()) {
    s.for_each_active(k, [&](const MultiIndex& a) {
      rows.push_back(a);
      w.push_back(s.weight(a));
    });
  }
  Eigen::MatrixXcd B(static_cast<Eigen::Index>(rows.size()), n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      B(static_cast<Eigen::Index>(r), c) = evs[static_cast<std::size_t>(c)].eval(rows[r]);
    }
  }
  Eigen::VectorXd dw = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  // K(p,q) = sum_a d_a B(a,p) conj(B(a,q))
  K = (B.adjoint() * dw.asDiagonal() * B).conjugate();
  // Symmetrize away rounding noise; K is Hermitian by construction.
  K = 0.5 * (K + K.adjoint()).eval();
  return K;
}

GramReport pd_verdict(const Eigen::MatrixXcd& K, int truncation_k_max, double tol) {
  if (K.rows() != K.cols()) throw std::domain_error("pd_verdict: matrix must be square");
  const double asym = (K - K.adjoint()).cwiseAbs().maxCoeff();
  if (K.rows() > 0 && asym > 1e-10) {
    throw std::domain_error("pd_verdict: input deviates from Hermitian by " +
                            std::to_string(asym));
  }
  GramReport rep;
  rep.n = static_cast<int>(K.rows());
  rep.truncation_k_max = truncation_k_max;
  rep.tolerance = tol;
  if (K.rows() == 0) return rep;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K);
  if (es.info() != Eigen::Success) throw std::runtime_error("pd_verdict: eigensolver failed");
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.max_eigenvalue = es.eigenvalues().maxCoeff();
  const double scale = std::max(1.0, rep.max_eigenvalue);
  if (rep.min_eigenvalue > tol * scale) {
    rep.verdict = PdVerdict::PositiveDefinite;
  } else if (rep.min_eigenvalue < -tol * scale) {
    rep.verdict = PdVerdict::Indefinite;
  } else {
    rep.verdict = PdVerdict::PositiveSemiDefiniteDegenerate;
    Eigen::VectorXcd c = es.eigenvectors().col(0);  // eigenvalues ascend
    c.normalize();
    normalize_phase(c);
    rep.witness = c;
    rep.witness_quadratic_form = std::abs((c.adjoint() * K * c)(0, 0));
  }
  return rep;
}

std::optional<Eigen::VectorXcd> spd_witness_search(const CoefficientScheme& s,
                                                   const std::vector<PolarPoint>& pts,
                                                   double tol) {
  if (pts.empty()) throw std::domain_error("spd_witness_search: need at least one point");
  check_no_duplicates(pts);
  const Eigen::MatrixXcd B = collocation_matrix(s, pts);
  if (B.rows() == 0) {
    throw std::domain_error("spd_witness_search: the scheme has no active indices");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const Eigen::Index n = B.cols();
  // With fewer rows than columns the trailing columns of the full V complete
  // an orthonormal basis of the nullspace; their singular values are 0.
  const double smin = (B.rows() >= n) ? sv[n - 1] : 0.0;
  if (smin > tol * smax) return std::nullopt;
  Eigen::VectorXcd c = svd.matrixV().col(n - 1);
  c.normalize();
  normalize_phase(c);
  return c;
}

InvarianceReport scheme_invariance_check(const CoefficientScheme& s1, const CoefficientScheme& s2,
                                         const std::vector<PolarPoint>& pts, double tol) {
  if (!s1.same_support(s2)) {
    throw std::domain_error(
        "scheme_invariance_check: the schemes do not share the same active set");
  }
  const GramReport r1 = pd_verdict(gram_matrix(s1, pts), s1.k_max(), tol);
  const GramReport r2 = pd_verdict(gram_matrix(s2, pts), s2.k_max(), tol);
  return {r1.verdict, r2.verdict, r1.verdict == r2.verdict};
}

}  // namespace spherekern
