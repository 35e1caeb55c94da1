#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tangentinf/errors.hpp"
#include "tangentinf/multipoly.hpp"
#include "tangentinf/puiseux.hpp"

using namespace tangentinf;

namespace {

const std::vector<std::string> kUW = {"u", "w"};

MultiPoly curve(const std::string& text) { return parse_poly(text, kUW); }

Rational rat(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("sqrt branches of w^2 - 2u") {
  PuiseuxResult r = expand_at_infinity(curve("w^2 - 2*u"));
  REQUIRE(r.branches.size() == 2);
  CHECK(r.complex_count == 0);
  CHECK(r.total_multiplicity() == 2);
  for (const auto& b : r.branches) {
    REQUIRE(b.terms.size() == 1);
    CHECK(b.exp_t() == rat(1));
    CHECK(b.multiplicity == 1);
    CHECK(b.separated);
    CHECK_FALSE(b.lead_coeff().is_rational());
    CHECK(b.lead_coeff().defining_poly() == UniPoly({rat(-2), rat(0), rat(1)}));
  }
  // sorted ascending by coefficient within the shared exponent
  CHECK(r.branches[0].lead_coeff().to_double() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.branches[1].lead_coeff().to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(AlgebraicNumber::equal(r.branches[0].lead_coeff(), r.branches[1].lead_coeff().negated()));
  CHECK(r.branches[1].approx_at_radius(100.0) == doctest::Approx(std::sqrt(2.0) * 100.0).epsilon(1e-12));
}

TEST_CASE("example1 free tangency curve splits into three real branches") {
  PuiseuxResult r = expand_at_infinity(curve("(w^2 - u)*(w - u - 1/4)").primitive_normalized());
  REQUIRE(r.branches.size() == 3);
  CHECK(r.complex_count == 0);
  CHECK(r.total_multiplicity() == 3);

  const PuiseuxBranch& quad = r.branches[0];  // w = u + 1/4, fastest growth first
  CHECK(quad.exp_t() == rat(2));
  REQUIRE(quad.terms.size() == 2);
  CHECK(quad.exact);
  CHECK(quad.terms[0].s_exp == rat(-1));
  CHECK(quad.terms[0].coeff.rational_value() == rat(1));
  CHECK(quad.terms[1].s_exp == rat(0));
  CHECK(quad.terms[1].coeff.rational_value() == rat(1, 4));
  CHECK_FALSE(quad.is_constant());

  for (int i : {1, 2}) {
    const PuiseuxBranch& b = r.branches[i];
    CHECK(b.exp_t() == rat(1));
    REQUIRE(b.terms.size() == 1);
    CHECK(b.exact);
    CHECK(b.terms[0].coeff.rational_value() == rat(i == 1 ? -1 : 1));
  }
}

TEST_CASE("single linear branch of w - u") {
  PuiseuxResult r = expand_at_infinity(curve("w - u"));
  REQUIRE(r.branches.size() == 1);
  CHECK(r.branches[0].exact);
  CHECK(r.branches[0].exp_t() == rat(2));
  CHECK(r.branches[0].lead_coeff().rational_value() == rat(1));
  CHECK(r.complex_count == 0);
}

TEST_CASE("constant branch of (w - 3)*(w - u)") {
  PuiseuxResult r = expand_at_infinity(curve("(w - 3)*(w - u)"));
  REQUIRE(r.branches.size() == 2);
  CHECK(r.branches[0].exp_t() == rat(2));
  const PuiseuxBranch& c = r.branches[1];
  CHECK(c.exp_t() == rat(0));
  REQUIRE(c.terms.size() == 1);
  CHECK(c.exact);
  CHECK(c.is_constant());
  CHECK(c.lead_coeff().rational_value() == rat(3));
}

TEST_CASE("zero branch of w*(w - u)") {
  PuiseuxResult r = expand_at_infinity(curve("w*(w - u)"));
  REQUIRE(r.branches.size() == 2);
  CHECK(r.branches[0].exp_t() == rat(2));
  const PuiseuxBranch& z = r.branches[1];
  CHECK(z.terms.empty());
  CHECK(z.exact);
  CHECK(z.is_constant());
  CHECK(z.exp_t() == rat(0));
  CHECK(z.lead_coeff().rational_value() == rat(0));
  CHECK(z.describe() == "0");
  CHECK(z.approx_at_radius(50.0) == 0.0);
}

TEST_CASE("double root splits under the radical") {
  // (w - u)^2 = u has the two branches u + sqrt(u) and u - sqrt(u)
  PuiseuxResult r = expand_at_infinity(curve("(w - u)^2 - u"));
  REQUIRE(r.branches.size() == 2);
  CHECK(r.complex_count == 0);
  for (int i : {0, 1}) {
    const PuiseuxBranch& b = r.branches[i];
    REQUIRE(b.terms.size() == 2);
    CHECK(b.exact);
    CHECK(b.multiplicity == 1);
    CHECK(b.terms[0].s_exp == rat(-1));
    CHECK(b.terms[0].coeff.rational_value() == rat(1));
    CHECK(b.terms[1].s_exp == rat(-1, 2));
    CHECK(b.terms[1].coeff.rational_value() == rat(i == 0 ? -1 : 1));
  }
}

TEST_CASE("complex branches are counted, not listed") {
  PuiseuxResult pure = expand_at_infinity(curve("w^2 + u"));
  CHECK(pure.branches.empty());
  CHECK(pure.complex_count == 2);

  PuiseuxResult mixed = expand_at_infinity(curve("(w^2 + u)*(w - u)"));
  REQUIRE(mixed.branches.size() == 1);
  CHECK(mixed.branches[0].exp_t() == rat(2));
  CHECK(mixed.complex_count == 2);
  CHECK(mixed.total_multiplicity() == 3);
}

TEST_CASE("conjugate pair hiding behind a double root") {
  // (w - u)^2 + 1 = 0 forces w = u +- i, real to first order only
  PuiseuxResult r = expand_at_infinity(curve("(w - u)^2 + 1"));
  CHECK(r.branches.empty());
  CHECK(r.complex_count == 2);
}

TEST_CASE("term cap truncates an infinite expansion") {
  // w = u/(u+1) = 1 - s + s^2 - ... never terminates
  MultiPoly p = curve("u*w + w - u");
  PuiseuxResult r3 = expand_at_infinity(p, 3);
  REQUIRE(r3.branches.size() == 1);
  const PuiseuxBranch& b = r3.branches[0];
  REQUIRE(b.terms.size() == 3);
  CHECK_FALSE(b.exact);
  CHECK(b.separated);
  for (int k = 0; k < 3; ++k) {
    CHECK(b.terms[k].s_exp == rat(k));
    CHECK(b.terms[k].coeff.rational_value() == rat(k % 2 == 0 ? 1 : -1));
  }

  PuiseuxResult r5 = expand_at_infinity(p, 5);
  REQUIRE(r5.branches.size() == 1);
  CHECK(r5.branches[0].terms.size() == 5);
  CHECK_FALSE(r5.branches[0].exact);
  double t = 10.0;
  double truth = (t * t) / (t * t + 1.0);
  CHECK(r5.branches[0].approx_at_radius(t) == doctest::Approx(truth).epsilon(1e-6));
}

TEST_CASE("a tight cap still reports every branch") {
  PuiseuxResult r = expand_at_infinity(curve("(w^2 - u)*(w - u - 1/4)").primitive_normalized(), 1);
  CHECK(r.branches.size() == 3);
  CHECK(r.total_multiplicity() == 3);
  CHECK(r.branches[0].terms.size() == 1);  // the +1/4 tail is cut off
  CHECK_FALSE(r.branches[0].exact);
}

TEST_CASE("branch count matches the curve degree") {
  std::mt19937 gen(20260819u);
  std::uniform_int_distribution<int> expo(0, 3), coef(-4, 4), nterms(2, 6);
  int checked = 0;
  for (int round = 0; round < 60 && checked < 40; ++round) {
    MultiPoly p = MultiPoly::constant(2, rat(0));
    int tn = nterms(gen);
    for (int k = 0; k < tn; ++k) {
      int c = coef(gen);
      if (c == 0) continue;
      Monomial m;
      m.e = {static_cast<uint32_t>(expo(gen)), static_cast<uint32_t>(expo(gen))};
      p = p + MultiPoly::term(2, m, rat(c));
    }
    if (p.is_zero() || p.degree_in(1) < 1) continue;
    ++checked;
    PuiseuxResult r = expand_at_infinity(p, 6);
    CHECK(r.total_multiplicity() == static_cast<long>(p.degree_in(1)));
    for (const auto& b : r.branches) {
      for (size_t i = 0; i + 1 < b.terms.size(); ++i) {
        CHECK(b.terms[i].s_exp < b.terms[i + 1].s_exp);
      }
      for (const auto& term : b.terms) CHECK(term.coeff.sign() != 0);
    }
  }
  CHECK(checked == 40);
}

TEST_CASE("degenerate curves are rejected") {
  CHECK_THROWS_AS(expand_at_infinity(curve("u^2 - 3")), Error);
  CHECK_THROWS_AS(expand_at_infinity(parse_poly("x^2", {"x"})), Error);
  CHECK_THROWS_AS(expand_at_infinity(curve("w - u"), 0), Error);
}
