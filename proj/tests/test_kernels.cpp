#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "spherekern/gram.hpp"
#include "spherekern/harmonics.hpp"
#include "spherekern/sampling.hpp"
#include "spherekern/scheme.hpp"
#include "spherekern/special_functions.hpp"

using namespace spherekern;
constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

namespace {
std::uint64_t streamed_active_count(const CoefficientScheme& s, int k) {
  std::uint64_t n = 0;
  s.for_each_active(k, [&](const MultiIndex&) { ++n; });
  return n;
}
std::uint64_t streamed_complement_count(const CoefficientScheme& s, int k) {
  std::uint64_t n = 0;
  s.for_each_complement(k, [&](const MultiIndex&) { ++n; });
  return n;
}
}  // namespace

TEST_CASE("scheme rules: membership and counts against streaming") {
  const int d = 4, K = 6;
  const auto schemes = {
      CoefficientScheme::full(d, K),     CoefficientScheme::jzero(d, K, 1),
      CoefficientScheme::jzero(d, K, 2), CoefficientScheme::even_only(d, K),
      CoefficientScheme::odd_only(d, K), CoefficientScheme::custom(d, K),
  };
  for (const auto& s : schemes) {
    for (int k = 0; k <= K; ++k) {
      CAPTURE(rule_name(s.rule()));
      CAPTURE(k);
      if (!s.degree_in_domain(k)) {
        CHECK(s.active_count(k) == 0);
        CHECK(s.complement_count(k) == 0);
        continue;
      }
      CHECK(s.active_count(k) == streamed_active_count(s, k));
      CHECK(s.complement_count(k) == streamed_complement_count(s, k));
      CHECK(s.active_count(k) + s.complement_count(k) == dim_harmonic(d, k));
    }
  }

  // closed forms
  const auto full = CoefficientScheme::full(d, K);
  const auto jz = CoefficientScheme::jzero(d, K, 2);
  for (int k = 0; k <= K; ++k) {
    CHECK(full.active_count(k) == dim_harmonic(d, k));
    CHECK(jz.active_count(k) == tau_jzero_count(d, k, 2));
  }
  const auto even = CoefficientScheme::even_only(d, K);
  CHECK(even.degree_in_domain(2));
  CHECK_FALSE(even.degree_in_domain(3));
  CHECK(even.domain_degrees() == std::vector<int>{0, 2, 4, 6});
  CHECK(CoefficientScheme::odd_only(d, K).domain_degrees() == std::vector<int>{1, 3, 5});

  // JZero active set is contained in the full active set
  for (int k = 0; k <= K; ++k) {
    jz.for_each_active(k, [&](const MultiIndex& a) {
      CHECK(a.component(2) == 0);
      CHECK(full.index_active(a));
    });
  }
}

TEST_CASE("exclusions reshape the active set") {
  auto s = CoefficientScheme::full(3, 4);
  const MultiIndex a({1, 2});
  CHECK(s.index_active(a));
  s.exclude_index(a);
  CHECK_FALSE(s.index_active(a));
  CHECK(s.index_excluded(a));
  CHECK(s.weight(a) == 0.0);
  CHECK(s.active_count(2) == 4);
  CHECK(s.complement_count(2) == 1);
  s.exclude_index(a);  // idempotent
  CHECK(s.complement_count(2) == 1);

  // complement streaming returns exactly the exclusions for subtractive rules
  std::vector<MultiIndex> comp;
  s.for_each_complement(2, [&](const MultiIndex& x) { comp.push_back(x); });
  REQUIRE(comp.size() == 1);
  CHECK(comp[0] == a);

  // degree gone entirely -> active_degrees drops it, domain keeps it
  for (const auto& idx : enumerate_tau(3, 1)) s.exclude_index(idx);
  CHECK(s.active_count(1) == 0);
  const auto act = s.active_degrees();
  CHECK(std::find(act.begin(), act.end(), 1) == act.end());
  const auto dom = s.domain_degrees();
  CHECK(std::find(dom.begin(), dom.end(), 1) != dom.end());

  // cannot exclude what the rule already leaves out
  auto z = CoefficientScheme::jzero(3, 4, 1);
  CHECK_THROWS_AS(z.exclude_index(MultiIndex({1, 2})), std::domain_error);
  auto e = CoefficientScheme::even_only(3, 4);
  CHECK_THROWS_AS(e.exclude_index(MultiIndex({0, 3})), std::domain_error);
  // dimension mismatch and truncation overflow
  CHECK_THROWS_AS(s.exclude_index(MultiIndex({0, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(s.exclude_index(MultiIndex({0, 9})), std::domain_error);
  // inadmissible indices are rejected, not silently inactive
  CHECK_THROWS_AS(s.index_active(MultiIndex({3, 1})), std::domain_error);
}

TEST_CASE("weight models") {
  auto s = CoefficientScheme::full(3, 5);
  CHECK(s.weight(MultiIndex({0, 3})) == 1.0);  // unit default
  s.set_geometric_weights(0.5);
  CHECK(s.weight(MultiIndex({0, 0})) == doctest::Approx(1.0));
  CHECK(s.weight(MultiIndex({0, 3})) == doctest::Approx(0.125));
  CHECK(s.weight(MultiIndex({-2, 3})) == doctest::Approx(0.125));
  CHECK_THROWS_AS(s.set_geometric_weights(0.0), std::domain_error);
  CHECK_THROWS_AS(s.set_geometric_weights(-0.3), std::domain_error);

  s.set_unit_weights();
  s.set_weight(MultiIndex({1, 1}), 2.5);
  CHECK(s.weight(MultiIndex({1, 1})) == 2.5);
  CHECK(s.weight(MultiIndex({0, 1})) == 1.0);  // unset explicit weights default to 1
  CHECK_THROWS_AS(s.set_weight(MultiIndex({0, 1}), 0.0), std::domain_error);
  CHECK_THROWS_AS(s.set_weight(MultiIndex({0, 1}), -1.0), std::domain_error);

  auto z = CoefficientScheme::jzero(3, 5, 1);
  CHECK(z.weight(MultiIndex({1, 1})) == 0.0);  // inactive under the rule
  CHECK_THROWS_AS(z.set_weight(MultiIndex({1, 1}), 1.0), std::domain_error);
}

TEST_CASE("scheme json round trip") {
  auto s = CoefficientScheme::jzero(4, 8, 2);
  s.set_parity(CoefficientScheme::DegreeParity::Even);
  s.exclude_index(MultiIndex({0, 0, 4}));
  s.set_geometric_weights(0.75);
  const auto js = s.to_json();
  CHECK(js.at("schema").get<std::string>() == "spherekern/1");
  const auto back = CoefficientScheme::from_json(js);
  CHECK(back.d() == 4);
  CHECK(back.k_max() == 8);
  CHECK(back.rule() == CoefficientScheme::Rule::JZero);
  CHECK(back.jzero_axis() == 2);
  CHECK(back.same_support(s));
  for (int k = 0; k <= 8; ++k) {
    s.for_each_active(k, [&](const MultiIndex& a) { CHECK(back.weight(a) == s.weight(a)); });
  }

  // explicit weights survive the round trip
  auto w = CoefficientScheme::full(3, 2);
  w.set_weight(MultiIndex({-1, 1}), 3.0);
  w.set_weight(MultiIndex({0, 2}), 0.25);
  const auto wb = CoefficientScheme::from_json(w.to_json());
  CHECK(wb.weight(MultiIndex({-1, 1})) == 3.0);
  CHECK(wb.weight(MultiIndex({0, 2})) == 0.25);
  CHECK(wb.weight(MultiIndex({1, 2})) == 1.0);

  // exclusion by ordinal: position in the lexicographic enumeration
  const nlohmann::json doc{
      {"schema", "spherekern/1"}, {"manifold", "sphere"},      {"d", 3},
      {"k_max", 2},               {"rule", "full"},            {"weights", "unit"},
      {"exclude", nlohmann::json::array({nlohmann::json::array(
                      {1, nlohmann::json::array({0, 2})})})},
  };
  const auto o = CoefficientScheme::from_json(doc);
  // tau_1 = (-1,1), (0,1), (1,1); ordinals 0 and 2 excluded
  CHECK_FALSE(o.index_active(MultiIndex({-1, 1})));
  CHECK(o.index_active(MultiIndex({0, 1})));
  CHECK_FALSE(o.index_active(MultiIndex({1, 1})));

  // exclusion by explicit index array
  const nlohmann::json doc2{
      {"schema", "spherekern/1"}, {"manifold", "sphere"},      {"d", 3},
      {"k_max", 2},               {"rule", "full"},            {"weights", "unit"},
      {"exclude", nlohmann::json::array({nlohmann::json::array(
                      {2, nlohmann::json::array({nlohmann::json::array({0, 2})})})})},
  };
  CHECK_FALSE(CoefficientScheme::from_json(doc2).index_active(MultiIndex({0, 2})));

  // wrong schema strings are refused
  auto bad = doc;
  bad["schema"] = "other/9";
  CHECK_THROWS_AS(CoefficientScheme::from_json(bad), std::domain_error);

  // file round trip
  const auto tmp = std::filesystem::temp_directory_path() / "spherekern_scheme_rt.json";
  s.save_file(tmp.string());
  const auto fb = CoefficientScheme::load_file(tmp.string());
  CHECK(fb.same_support(s));
  std::filesystem::remove(tmp);
}

TEST_CASE("kernel evaluation: unit full scheme is the zonal series") {
  const int d = 3, K = 8;
  const auto s = CoefficientScheme::full(d, K);
  const ManifoldSpec m = ManifoldSpec::sphere(d);
  const auto pts = random_sphere_points(d, 4, 11);
  const std::vector<double> ones(static_cast<std::size_t>(K) + 1, 1.0);
  for (int i = 0; i < 3; ++i) {
    const auto& p = pts[static_cast<std::size_t>(i)];
    const auto& q = pts[static_cast<std::size_t>(i) + 1];
    const double t = kernel_argument(to_cartesian(p), to_cartesian(q), m);
    const cd got = kernel_eval(s, p, q);
    const double want = isotropic_kernel_eval(ones, m, t);
    CHECK(std::abs(got - cd(want)) <= 1e-10 * std::abs(want));
    // Hermitian in the arguments
    CHECK(std::abs(kernel_eval(s, q, p) - std::conj(got)) <= 1e-12 * std::abs(got));
  }
  // weights scale degree by degree
  auto g = CoefficientScheme::full(d, K);
  g.set_geometric_weights(0.5);
  std::vector<double> geo(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) geo[static_cast<std::size_t>(k)] = std::pow(0.5, k);
  const double t =
      kernel_argument(to_cartesian(pts[0]), to_cartesian(pts[1]), m);
  CHECK(std::abs(kernel_eval(g, pts[0], pts[1]) -
                 cd(isotropic_kernel_eval(geo, m, t))) <= 1e-10);

  CHECK_THROWS_AS(isotropic_kernel_eval(ones, m, 1.5), std::domain_error);
}

TEST_CASE("gram matrices and verdicts") {
  const int d = 3;
  const auto s = CoefficientScheme::full(d, 6);
  const auto pts = random_sphere_points(d, 5, 17);
  const Eigen::MatrixXcd K = gram_matrix(s, pts);
  REQUIRE(K.rows() == 5);
  CHECK((K - K.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  // diagonal = sum of active dimensions (unit weights)
  double diag = 0.0;
  for (int k = 0; k <= 6; ++k) diag += static_cast<double>(dim_harmonic(d, k));
  for (int i = 0; i < 5; ++i) CHECK(K(i, i).real() == doctest::Approx(diag).epsilon(1e-12));

  const GramReport rep = pd_verdict(K, s.k_max());
  CHECK(rep.verdict == PdVerdict::PositiveDefinite);
  CHECK(rep.min_eigenvalue > 0.0);
  CHECK(rep.n == 5);
  CHECK_FALSE(rep.witness.has_value());
  const auto js = rep.to_json();
  CHECK(js.at("verdict").get<std::string>() == "positive-definite");

  // 1x1 matrix: K(p,p) = diag value
  const Eigen::MatrixXcd K1 = gram_matrix(s, {pts[0]});
  CHECK(K1(0, 0).real() == doctest::Approx(diag).epsilon(1e-12));

  // duplicate points are refused with the pair named
  CHECK_THROWS_WITH_AS(gram_matrix(s, {pts[0], pts[1], pts[0]}),
                       doctest::Contains("0"), std::domain_error);
}

TEST_CASE("pd_verdict classifies fixed matrices") {
  const double tol = 1e-10;
  {
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(3, 3);
    CHECK(pd_verdict(I, 0, tol).verdict == PdVerdict::PositiveDefinite);
  }
  {
    Eigen::MatrixXcd ones = Eigen::MatrixXcd::Constant(2, 2, cd(1.0, 0.0));
    const GramReport rep = pd_verdict(ones, 0, tol);
    CHECK(rep.verdict == PdVerdict::PositiveSemiDefiniteDegenerate);
    REQUIRE(rep.witness.has_value());
    const auto& c = *rep.witness;
    CHECK(std::abs(std::abs(c[0]) - std::sqrt(0.5)) <= 1e-12);
    CHECK(std::abs(c[0] + c[1]) <= 1e-12);  // proportional to (1, -1)
    // deterministic phase: the largest entry is real positive
    CHECK(c[0].real() > 0.0);
    CHECK(std::abs(c[0].imag()) <= 1e-14);
    CHECK(rep.witness_quadratic_form <= 1e-12);
  }
  {
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = -1.0;
    CHECK(pd_verdict(D, 0, tol).verdict == PdVerdict::Indefinite);
  }
  {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2, 2);
    M(0, 1) = cd(0.0, 1.0);
    M(1, 0) = cd(0.0, 1.0);  // not Hermitian: M(1,0) should be -i
    CHECK_THROWS_AS(pd_verdict(M, 0, tol), std::domain_error);
  }
  {
    // near-zero matrix counts as degenerate, not indefinite
    Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(2, 2);
    CHECK(pd_verdict(Z, 0, tol).verdict == PdVerdict::PositiveSemiDefiniteDegenerate);
  }
}

TEST_CASE("antipodal controls: even scheme degenerates, odd scheme too") {
  const int d = 3;
  const PolarPoint p({0.4, 1.0});
  const PolarPoint q = antipode(p);

  {
    const auto even = CoefficientScheme::even_only(d, 8);
    const Eigen::MatrixXcd K = gram_matrix(even, {p, q});
    const GramReport rep = pd_verdict(K, 8);
    CHECK(rep.verdict == PdVerdict::PositiveSemiDefiniteDegenerate);
    REQUIRE(rep.witness.has_value());
    // kernel of the even Gram on an antipodal pair is spanned by (1, -1)
    const auto& c = *rep.witness;
    CHECK(std::abs(c[0] + c[1]) <= 1e-8);
    CHECK(rep.witness_quadratic_form <= 1e-10 * rep.max_eigenvalue);

    const auto w = spd_witness_search(even, {p, q}, 1e-10);
    REQUIRE(w.has_value());
    CHECK(std::abs((*w)[0] + (*w)[1]) <= 1e-8);
  }
  {
    const auto odd = CoefficientScheme::odd_only(d, 9);
    const Eigen::MatrixXcd K = gram_matrix(odd, {p, q});
    const GramReport rep = pd_verdict(K, 9);
    CHECK(rep.verdict == PdVerdict::PositiveSemiDefiniteDegenerate);
    REQUIRE(rep.witness.has_value());
    CHECK(std::abs((*rep.witness)[0] - (*rep.witness)[1]) <= 1e-8);
  }
  {
    // full scheme on the same pair stays positive definite: no witness
    const auto full = CoefficientScheme::full(d, 8);
    CHECK(pd_verdict(gram_matrix(full, {p, q}), 8).verdict == PdVerdict::PositiveDefinite);
    CHECK_FALSE(spd_witness_search(full, {p, q}, 1e-10).has_value());
  }
}

TEST_CASE("witness soundness on a degenerate configuration") {
  // More points than the even truncation can separate: n > rank forces a
  // nullspace the search must find, and the vector must annihilate the Gram.
  const int d = 3, K = 2;  // rank = 1 + 5 = 6 harmonics
  const auto s = CoefficientScheme::even_only(d, K);
  const auto pts = random_sphere_points(d, 8, 23);
  const auto w = spd_witness_search(s, pts, 1e-8);
  REQUIRE(w.has_value());
  CHECK(std::abs(w->norm() - 1.0) <= 1e-12);
  const Eigen::MatrixXcd Km = gram_matrix(s, pts);
  const double qform = std::abs(((*w).adjoint() * Km * (*w))(0, 0));
  CHECK(qform <= 1e-10 * Km.cwiseAbs().maxCoeff());
}

TEST_CASE("verdict class is invariant under reweighting") {
  const int d = 3;
  const PolarPoint p({0.4, 1.0});
  const PolarPoint q = antipode(p);
  const auto pts = random_sphere_points(d, 6, 41);

  auto u = CoefficientScheme::full(d, 6);
  auto g = CoefficientScheme::full(d, 6);
  g.set_geometric_weights(0.8);
  const InvarianceReport r1 = scheme_invariance_check(u, g, pts);
  CHECK(r1.same_class);
  CHECK(r1.first == PdVerdict::PositiveDefinite);

  auto e1 = CoefficientScheme::even_only(d, 8);
  auto e2 = CoefficientScheme::even_only(d, 8);
  e2.set_geometric_weights(0.6);
  const InvarianceReport r2 = scheme_invariance_check(e1, e2, {p, q});
  CHECK(r2.same_class);
  CHECK(r2.first == PdVerdict::PositiveSemiDefiniteDegenerate);

  // different supports are refused
  auto f = CoefficientScheme::full(d, 6);
  auto z = CoefficientScheme::jzero(d, 6, 1);
  CHECK_THROWS_AS(scheme_invariance_check(f, z, pts), std::domain_error);
  CHECK_FALSE(f.same_support(z));
  CHECK(f.same_support(u));
}
