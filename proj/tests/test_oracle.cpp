#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tangentinf/errors.hpp"
#include "tangentinf/oracle.hpp"
#include "tangentinf/problem.hpp"
#include "tangentinf/systems.hpp"

using namespace tangentinf;

namespace {

Problem prob(const std::string& text) { return Problem::from_text(text); }

const char* kRepo = TANGENTINF_REPO_DIR;

OracleConfig fast_cfg() {
  OracleConfig cfg;
  cfg.seed = 42;
  cfg.starts = 24;
  return cfg;
}

}  // namespace

TEST_CASE("compiled evaluation matches the exact polynomial") {
  MultiPoly p = parse_poly("3*x^2*y - y^3 + 5*x - 7", {"x", "y"});
  CompiledPoly cp(p);
  std::vector<double> x = {1.5, -2.25};
  CHECK(cp.eval(x) == doctest::Approx(p.eval_double({1.5, -2.25})).epsilon(1e-14));
  std::vector<double> g(2, 0.0);
  cp.add_gradient(x, 2.0, g);
  // 2 * (6xy + 5, 3x^2 - 3y^2)
  CHECK(g[0] == doctest::Approx(2.0 * (6.0 * 1.5 * -2.25 + 5.0)).epsilon(1e-14));
  CHECK(g[1] == doctest::Approx(2.0 * (3.0 * 2.25 - 3.0 * 5.0625)).epsilon(1e-14));
  CHECK(cp.row_scale(x) > 0.0);
}

TEST_CASE("radial objective pins psi to the squared radius") {
  Problem p = prob("vars: x y\nobjective: x^2 + y^2\n");
  SphereSample s = sample_psi(p, 10.0, fast_cfg());
  REQUIRE(s.feasible);
  CHECK(s.psi == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(std::abs(std::hypot(s.minimizer[0], s.minimizer[1]) - 10.0) <= 1e-8);
  CHECK(s.agreement >= 6);  // every start lands somewhere on the sphere at value 100
  CHECK(s.feas_residual <= 1e-8);
}

TEST_CASE("linear objective reaches the antipodal direction") {
  Problem p = prob("vars: x y\nobjective: x + y\n");
  SphereSample s = sample_psi(p, 10.0, fast_cfg());
  REQUIRE(s.feasible);
  CHECK(s.psi == doctest::Approx(-10.0 * std::sqrt(2.0)).epsilon(1e-7));
  CHECK(s.minimizer[0] == doctest::Approx(-10.0 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(s.minimizer[1] == doctest::Approx(-10.0 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(s.agreement >= 6);
}

TEST_CASE("nonnegativity constraints clamp the sphere minimum") {
  Problem p = Problem::load(std::string(kRepo) + "/problems/quadrant.prob");
  SphereSample s = sample_psi(p, 10.0, fast_cfg());
  REQUIRE(s.feasible);
  CHECK(s.psi == doctest::Approx(10.0).epsilon(1e-7));
  CHECK(s.minimizer[0] >= -1e-9);
  CHECK(s.minimizer[1] >= -1e-9);
}

TEST_CASE("lifted absolute value tracks the smallest branch") {
  Problem p = Problem::load(std::string(kRepo) + "/problems/example1.prob");
  std::vector<SphereSample> grid = psi_grid(p, {10.0, 100.0}, fast_cfg());
  REQUIRE(grid.size() == 2);
  REQUIRE(grid[0].feasible);
  REQUIRE(grid[1].feasible);
  CHECK(grid[0].psi == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(grid[1].psi == doctest::Approx(100.0).epsilon(1e-6));
  // minimizer sits on the lifted axis: x = 0, z = |y| = t
  CHECK(std::abs(grid[1].minimizer[0]) <= 1e-6);
  CHECK(grid[1].minimizer[2] == doctest::Approx(100.0).epsilon(1e-6));
}

TEST_CASE("hyperbola with lift decays toward zero") {
  Problem p = Problem::load(std::string(kRepo) + "/problems/example3.prob");
  SphereSample s = sample_psi(p, 1000.0, fast_cfg());
  REQUIRE(s.feasible);
  CHECK(std::abs(s.psi) <= 1e-2);
  CHECK(s.psi >= -1e-9);  // objective is a square plus a nonnegative variable
}

TEST_CASE("identical seeds give bitwise identical samples") {
  Problem p = prob("vars: x y\nobjective: x*y + x^3\n");
  OracleConfig cfg = fast_cfg();
  SphereSample a = sample_psi(p, 7.0, cfg);
  SphereSample b = sample_psi(p, 7.0, cfg);
  REQUIRE(a.feasible == b.feasible);
  CHECK(a.psi == b.psi);
  CHECK(a.agreement == b.agreement);
  REQUIRE(a.minimizer.size() == b.minimizer.size());
  for (size_t i = 0; i < a.minimizer.size(); ++i) CHECK(a.minimizer[i] == b.minimizer[i]);
}

TEST_CASE("grid respects its own lower bound across radii") {
  Problem p = prob("vars: x y\nobjective: x + y\n");
  std::vector<SphereSample> grid = psi_grid(p, {10.0, 100.0, 1000.0}, fast_cfg());
  double lo = grid[0].psi;
  for (const auto& s : grid) lo = std::min(lo, s.psi);
  for (const auto& s : grid) CHECK(s.psi >= lo - 1e-9);
  CHECK(grid[2].psi == doctest::Approx(-1000.0 * std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("domain probes separate bounded from unbounded sets") {
  Problem plane = prob("vars: x y\nobjective: x\n");
  DomainCheck c1 = check_unbounded_domain(plane, {10.0, 100.0, 1000.0}, fast_cfg());
  CHECK(c1.unbounded);
  CHECK(c1.witnesses.size() == 3);

  Problem ball = prob("vars: x y\nobjective: x\nineq: 1 - x^2 - y^2\n");
  DomainCheck c2 = check_unbounded_domain(ball, {10.0}, fast_cfg());
  CHECK_FALSE(c2.unbounded);
  CHECK(c2.failed_radius == 10.0);

  Problem quadrant = Problem::load(std::string(kRepo) + "/problems/quadrant.prob");
  DomainCheck c3 = check_unbounded_domain(quadrant, {10.0, 100.0}, fast_cfg());
  CHECK(c3.unbounded);
  for (size_t i = 0; i < c3.witnesses.size(); ++i) {
    CHECK(c3.witnesses[i][0] >= -1e-9);
    CHECK(c3.witnesses[i][1] >= -1e-9);
  }
}

TEST_CASE("tangency system of a linear objective has the two diagonal points") {
  Problem p = prob("vars: x y\nobjective: x + y\n");
  SystemLayout L;
  PolySystem sys = build_tangency_system(p, {}, &L);
  std::vector<double> scales(sys.nvars(), 1.0);
  scales[L.x(0)] = scales[L.x(1)] = 10.0;
  scales[L.w()] = 20.0;
  std::vector<NumericSolution> sols =
      solve_system_numeric(sys, fast_cfg(), L.u(), 100.0, scales);
  REQUIRE(sols.size() >= 2);
  double d = 10.0 / std::sqrt(2.0);
  bool saw_neg = false, saw_pos = false;
  for (const auto& s : sols) {
    CHECK(s.residual <= 1e-8);
    if (std::abs(s.x[L.x(0)] + d) < 1e-6 && std::abs(s.x[L.x(1)] + d) < 1e-6) saw_neg = true;
    if (std::abs(s.x[L.x(0)] - d) < 1e-6 && std::abs(s.x[L.x(1)] - d) < 1e-6) saw_pos = true;
  }
  CHECK(saw_neg);
  CHECK(saw_pos);
}

TEST_CASE("radial tangency system returns representatives with mu near -2") {
  Problem p = prob("vars: x y\nobjective: x^2 + y^2\n");
  SystemLayout L;
  PolySystem sys = build_tangency_system(p, {}, &L);
  std::vector<double> scales(sys.nvars(), 1.0);
  scales[L.x(0)] = scales[L.x(1)] = 10.0;
  scales[L.w()] = 100.0;
  std::vector<NumericSolution> sols =
      solve_system_numeric(sys, fast_cfg(), L.u(), 100.0, scales);
  REQUIRE(!sols.empty());
  for (const auto& s : sols) {
    CHECK(s.x[L.mu()] == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(s.x[L.w()] == doctest::Approx(100.0).epsilon(1e-6));
  }
}

TEST_CASE("a system with no real points comes back empty") {
  PolySystem sys;
  sys.names = {"x"};
  sys.keep_from = 1;
  sys.polys = {parse_poly("x^2 + 1", {"x"})};
  CHECK(solve_system_numeric(sys, fast_cfg()).empty());
}

TEST_CASE("active gradient rank check flags degeneracy") {
  // two active constraints with parallel gradients at the origin
  Problem bad = prob("vars: x y\nobjective: x\nineq: x\nineq: x + x^2\n");
  double sv = licq_min_singular(bad, {0.0, 1.0}, 1e-8);
  CHECK(sv <= 1e-8);

  Problem good = Problem::load(std::string(kRepo) + "/problems/quadrant.prob");
  double sv2 = licq_min_singular(good, {0.0, 0.0}, 1e-8);
  CHECK(sv2 == doctest::Approx(1.0).epsilon(1e-12));

  Problem free_p = prob("vars: x y\nobjective: x\n");
  CHECK(std::isinf(licq_min_singular(free_p, {1.0, 1.0}, 1e-8)));
}

TEST_CASE("leading term regression recovers growth and decay") {
  std::vector<SphereSample> line;
  for (double t : {10.0, 100.0, 1000.0}) {
    SphereSample s;
    s.t = t;
    s.psi = -std::sqrt(2.0) * t;
    s.feasible = true;
    line.push_back(s);
  }
  LeadingFit f1 = fit_leading_term(line);
  REQUIRE(f1.ok);
  CHECK(f1.alpha == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(f1.a == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));

  std::vector<SphereSample> decay;
  for (double t : {10.0, 100.0, 1000.0}) {
    SphereSample s;
    s.t = t;
    s.psi = 5.0 / (t * t);
    s.feasible = true;
    decay.push_back(s);
  }
  LeadingFit f2 = fit_leading_term(decay);
  REQUIRE(f2.ok);
  CHECK(f2.alpha == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(f2.a == doctest::Approx(5.0).epsilon(1e-9));

  std::vector<SphereSample> mixed = line;
  mixed[1].psi = 3.0;
  CHECK_FALSE(fit_leading_term(mixed).ok);
}

TEST_CASE("curve root polishing converges quadratically") {
  MultiPoly curve = parse_poly("w^2 - 2*u", {"u", "w"});
  double resid = 1.0;
  double w = polish_curve_root(curve, 10000.0, 140.0, 50, &resid);
  CHECK(w == doctest::Approx(std::sqrt(2.0) * 100.0).epsilon(1e-12));
  CHECK(resid <= 1e-12);
}
