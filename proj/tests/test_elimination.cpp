#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "tangentinf/elimination.hpp"
#include "tangentinf/errors.hpp"
#include "tangentinf/groebner.hpp"
#include "tangentinf/problem.hpp"
#include "tangentinf/resultant.hpp"
#include "tangentinf/systems.hpp"

using namespace tangentinf;

namespace {

const std::string kRepo = TANGENTINF_REPO_DIR;

Rational rat(long n, long d = 1) { return Rational(n, d); }

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& ord) {
  auto [mf, cf] = f.leading_term(ord);
  auto [mg, cg] = g.leading_term(ord);
  Monomial l = Monomial::lcm(mf, mg);
  int n = f.nvars();
  return f * MultiPoly::term(n, l.divide(mf), Rational(1) / cf) -
         g * MultiPoly::term(n, l.divide(mg), Rational(1) / cg);
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int maxexp) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> expd(0, maxexp);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (int v = 0; v < nvars; ++v) m.e[v] = static_cast<uint32_t>(expd(rng));
    p.add_term(m, Rational(coef(rng)));
  }
  return p;
}

// Plane-curve ring helper: u is variable 0, w is variable 1.
MultiPoly uw(const std::string& text) { return parse_poly(text, {"u", "w"}); }

}  // namespace

TEST_CASE("normal form reduces exactly the reducible part") {
  std::vector<std::string> names = {"x", "y"};
  TermOrder ord = TermOrder::grevlex();
  std::vector<MultiPoly> basis = {parse_poly("x^2 - y", names)};
  StepBudget b(1000);
  MultiPoly nf = normal_form(parse_poly("x^4 + x^2 + 1", names), basis, ord, b);
  // x^4 -> y^2, x^2 -> y.
  CHECK(nf == parse_poly("y^2 + y + 1", names));
  StepBudget tiny(1);
  CHECK_THROWS_AS(
      normal_form(parse_poly("x^4 + x^2 + 1", names), basis, ord, tiny),
      BudgetExceededError);
}

TEST_CASE("groebner basis of a principal ideal is its generator") {
  std::vector<std::string> names = {"x", "y"};
  MultiPoly g = parse_poly("x^2 + y^2 - 1", names);
  StepBudget b(100000);
  auto basis = groebner_basis({g, g.scaled(rat(3)), g * parse_poly("x", names)},
                              TermOrder::grevlex(), b);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == g.primitive_normalized());
}

TEST_CASE("every s-polynomial reduces to zero modulo the basis") {
  std::mt19937_64 rng(314159);
  TermOrder ord = TermOrder::grevlex();
  int nontrivial = 0;
  for (int round = 0; round < 25; ++round) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 3; ++i) {
      MultiPoly p = random_poly(rng, 3, 3, 2);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.size() < 2) continue;
    StepBudget b(2000000);
    std::vector<MultiPoly> basis;
    try {
      basis = groebner_basis(gens, ord, b);
    } catch (const BudgetExceededError&) {
      continue;  // rare blowup; the property is checked on the rest
    }
    if (basis.size() < 2) continue;
    ++nontrivial;
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i + 1; j < basis.size(); ++j) {
        StepBudget nb(2000000);
        CHECK(normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord, nb)
                  .is_zero());
      }
    // Ideal membership: combinations of generators reduce to zero.
    StepBudget nb(2000000);
    MultiPoly combo = gens[0] * random_poly(rng, 3, 2, 1) +
                      gens[1] * random_poly(rng, 3, 2, 1);
    CHECK(normal_form(combo, basis, ord, nb).is_zero());
  }
  CHECK(nontrivial >= 10);
}

TEST_CASE("sylvester resultant matches evaluation at linear factors") {
  std::vector<std::string> names = {"x", "y"};
  MultiPoly f = parse_poly("x^2 - y", names);
  MultiPoly lin = parse_poly("x - 3", names);
  MultiPoly r = resultant(f, lin, 0);
  CHECK(r == parse_poly("9 - y", names));  // f evaluated at the root of lin
  MultiPoly r2 = resultant(parse_poly("x^2 - 2", names), parse_poly("x - y", names), 0);
  // res_x(x^2 - 2, x - y) = y^2 - 2 up to sign.
  bool ok = r2 == parse_poly("y^2 - 2", names) || r2 == parse_poly("2 - y^2", names);
  CHECK(ok);
  CHECK(resultant(parse_poly("x^2 - y", names), parse_poly("x^2 - y", names), 0)
            .is_zero());
  CHECK_THROWS_AS(resultant(f, parse_poly("y", names), 0), Error);
}

TEST_CASE("resultant vanishes exactly on common roots") {
  std::vector<std::string> names = {"x", "y"};
  MultiPoly f = parse_poly("x*y - 1", names);
  MultiPoly g = parse_poly("x^2 + y^2 - 4", names);
  MultiPoly r = resultant(f, g, 0);
  // At y0, r = 0 iff some x has x*y0 = 1 and x^2 + y0^2 = 4; eliminating x
  // gives 1/y0^2 + y0^2 = 4, i.e. y0^4 - 4*y0^2 + 1 = 0.
  UniPoly ry = to_unipoly(r.remap(1, {-1, 0}), 0);
  UniPoly expect({rat(1), rat(0), rat(-4), rat(0), rat(1)});
  CHECK(UniPoly::divrem(ry, expect).second.is_zero());
}

TEST_CASE("groebner and resultant elimination agree on the parabola relation") {
  // y = x^2, z = x^3 over x: the projection satisfies z^2 = y^3.
  std::vector<std::string> names = {"x", "y", "z"};
  PolySystem sys;
  sys.names = names;
  sys.mult_from = 1;
  sys.keep_from = 1;
  sys.polys = {parse_poly("y - x^2", names), parse_poly("z - x^3", names)};
  EliminationOptions opt;
  bool fell = false;
  auto gens = eliminate_kept(sys, opt, &fell);
  CHECK_FALSE(fell);
  REQUIRE(gens.size() >= 1);
  MultiPoly expect = parse_poly("y^3 - z^2", {"y", "z"}).primitive_normalized();
  bool found = false;
  for (const auto& g : gens) found = found || g == expect;
  CHECK(found);

  EliminationOptions fr;
  fr.force_resultants = true;
  auto gens2 = eliminate_kept(sys, fr, &fell);
  CHECK(fell);
  REQUIRE(gens2.size() == 1);
  CHECK(gens2[0] == expect);
}

TEST_CASE("plane curve for an unconstrained linear objective") {
  Problem p = Problem::load(kRepo + "/problems/example2.prob");
  PolySystem sys = build_tangency_system(p, {});
  EliminationOptions opt;
  PlaneCurve pc = eliminate_to_plane_curve(sys, opt);
  CHECK_FALSE(pc.used_fallback);
  CHECK(pc.curve == uw("w^2 - 2*u").primitive_normalized());

  EliminationOptions fr;
  fr.force_resultants = true;
  PlaneCurve pc2 = eliminate_to_plane_curve(sys, fr);
  CHECK(pc2.used_fallback);
  CHECK(pc2.curve == pc.curve);
}

TEST_CASE("plane curves for the lifted absolute value objective") {
  Problem p = Problem::load(kRepo + "/problems/example1.prob");
  EliminationOptions opt;
  // Active lift constraint: minimum over z = 0 is x^2 on the sphere, w = u.
  PolySystem on = build_tangency_system(p, {0});
  PlaneCurve pon = eliminate_to_plane_curve(on, opt);
  CHECK(pon.curve.eval_exact({rat(9), rat(9)}).is_zero());
  CHECK_FALSE(pon.curve.eval_exact({rat(9), rat(8)}).is_zero());
  // Inactive: components w^2 = u (valley floor) and w = u + 1/4.
  PolySystem off = build_tangency_system(p, {});
  PlaneCurve poff = eliminate_to_plane_curve(off, opt);
  CHECK(poff.curve.eval_exact({rat(4), rat(2)}).is_zero());
  CHECK(poff.curve.eval_exact({rat(4), rat(-2)}).is_zero());
  CHECK(poff.curve.eval_exact({rat(4), rat(17, 4)}).is_zero());
  CHECK_FALSE(poff.curve.eval_exact({rat(4), rat(3)}).is_zero());
  MultiPoly expect = (uw("w^2 - u") * uw("w - u - 1/4")).primitive_normalized();
  CHECK(poff.curve == expect);
}

TEST_CASE("critical values of the lifted absolute value objective") {
  Problem p = Problem::load(kRepo + "/problems/example1.prob");
  EliminationOptions opt;
  // Active set {z = 0}: the critical point is the origin with value 0.
  CriticalValues on = eliminate_to_critical_values(build_critical_system(p, {0}), opt);
  CHECK(on.values.degree() == 1);
  CHECK(on.values.eval(rat(0)).is_zero());
  // Inactive: no critical points at all.
  CriticalValues off = eliminate_to_critical_values(build_critical_system(p, {}), opt);
  CHECK(off.values.is_constant());
}

TEST_CASE("critical values of the hyperbola penalty with active lift") {
  Problem p = Problem::load(kRepo + "/problems/example3.prob");
  EliminationOptions opt;
  // On z = 0 the only critical point is the origin, f = 1.
  CriticalValues cv = eliminate_to_critical_values(build_critical_system(p, {0}), opt);
  REQUIRE(cv.values.degree() == 1);
  CHECK(cv.values.eval(rat(1)).is_zero());
  // Off z = 0 there are none.
  CriticalValues off = eliminate_to_critical_values(build_critical_system(p, {}), opt);
  CHECK(off.values.is_constant());
}

TEST_CASE("a stationarity contradiction yields no critical values") {
  Problem p = Problem::load(kRepo + "/problems/example2.prob");
  EliminationOptions opt;
  CriticalValues cv = eliminate_to_critical_values(build_critical_system(p, {}), opt);
  CHECK(cv.values.is_constant());
}

TEST_CASE("an infeasible constraint system gives a constant curve") {
  Problem p = Problem::from_text(
      "vars: x\n"
      "objective: x\n"
      "eq: x\n"
      "eq: x - 1\n");
  CHECK_FALSE(p.trivially_infeasible);  // not constant-foldable
  PolySystem sys = build_tangency_system(p, {});
  EliminationOptions opt;
  PlaneCurve pc = eliminate_to_plane_curve(sys, opt);
  CHECK(pc.curve.is_constant());
  CHECK_FALSE(pc.curve.is_zero());
}

TEST_CASE("vertical components are stripped and repeated factors dropped") {
  // Hand-built system already in (u, w): u * (w - u)^2 = 0 and the pool
  // only contains that one generator.
  PolySystem sys;
  sys.names = {"u", "w"};
  sys.mult_from = 0;
  sys.keep_from = 0;
  sys.polys = {uw("u") * uw("w - u") * uw("w - u")};
  EliminationOptions opt;
  PlaneCurve pc = eliminate_to_plane_curve(sys, opt);
  CHECK(pc.curve == uw("w - u").primitive_normalized());
}
