#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "tangentinf/asymptotics.hpp"
#include "tangentinf/errors.hpp"
#include "tangentinf/problem.hpp"

using namespace tangentinf;

namespace {

const char* kRepo = TANGENTINF_REPO_DIR;

Problem fixture(const char* name) {
  return Problem::load(std::string(kRepo) + "/problems/" + name);
}

CertifyOptions fast_opts() {
  CertifyOptions o;
  o.oracle.seed = 42;
  o.oracle.starts = 24;
  return o;
}

PuiseuxBranch mk(std::vector<std::pair<Rational, Rational>> terms, bool exact = true) {
  PuiseuxBranch b;
  for (auto& t : terms) b.terms.push_back({t.first, AlgebraicNumber(t.second)});
  b.exact = exact;
  return b;
}

const CertifiedBranch* find_branch(const ActiveSetAnalysis& a, double alpha, double coeff) {
  for (const auto& b : a.branches) {
    if (std::fabs(b.expansion.exp_t().to_double() - alpha) > 1e-9) continue;
    if (std::fabs(b.expansion.lead_coeff().to_double() - coeff) > 1e-6) continue;
    return &b;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("branch limits follow the leading exponent and the constant term") {
  CHECK(limit_of(mk({{Rational(-1), Rational(3)}})).kind == ExtValue::Kind::PosInf);
  CHECK(limit_of(mk({{Rational(-1, 2), Rational(-2)}})).kind == ExtValue::Kind::NegInf);

  ExtValue v = limit_of(mk({{Rational(0), Rational(5)}, {Rational(1, 2), Rational(1)}}, false));
  REQUIRE(v.is_finite());
  CHECK(v.v == AlgebraicNumber(Rational(5)));

  ExtValue decay = limit_of(mk({{Rational(1, 2), Rational(5)}}));
  REQUIRE(decay.is_finite());
  CHECK(decay.v.sign() == 0);

  ExtValue zero = limit_of(mk({}));
  REQUIRE(zero.is_finite());
  CHECK(zero.v.sign() == 0);
}

TEST_CASE("constant lines are proven by exact division") {
  std::vector<std::string> uw{"u", "w"};
  MultiPoly curve = parse_poly("(w - 2)*(w - u)", uw);
  CHECK(proves_constant_line(curve, mk({{Rational(0), Rational(2)}})));
  CHECK(!proves_constant_line(curve, mk({{Rational(0), Rational(3)}})));

  // the zero branch needs w itself as a factor
  CHECK(proves_constant_line(parse_poly("w*(w - u)", uw), mk({})));
  CHECK(!proves_constant_line(parse_poly("w - u", uw), mk({})));

  // irrational constant: its minimal polynomial must divide the curve
  AlgebraicNumber rt2 = AlgebraicNumber::from_root(
      UniPoly({Rational(-2), Rational(0), Rational(1)}), Rational(1), Rational(2));
  PuiseuxBranch irr;
  irr.terms.push_back({Rational(0), rt2});
  irr.exact = true;
  CHECK(proves_constant_line(parse_poly("(w^2 - 2)*(w - u)", uw), irr));
  CHECK(!proves_constant_line(parse_poly("(w^2 - 3)*(w - u)", uw), irr));
}

TEST_CASE("free linear objective splits into one rising and one sinking branch") {
  Problem p = fixture("example2.prob");
  ActiveSetAnalysis a = analyze_active_set(p, {}, fast_opts());
  REQUIRE(!a.skipped);
  REQUIRE(a.branches.size() == 2);

  const CertifiedBranch* up = find_branch(a, 1.0, std::sqrt(2.0));
  const CertifiedBranch* dn = find_branch(a, 1.0, -std::sqrt(2.0));
  REQUIRE(up);
  REQUIRE(dn);
  CHECK(up->status == BranchStatus::certified);
  CHECK(dn->status == BranchStatus::certified);
  CHECK(up->lambda.kind == ExtValue::Kind::PosInf);
  CHECK(dn->lambda.kind == ExtValue::Kind::NegInf);
  CHECK(!up->is_constant);
  CHECK(up->certified_real);
  CHECK(up->certified_feasible);

  // leading coefficient exactly sqrt(2): minimal polynomial a^2 - 2
  const AlgebraicNumber& c = up->expansion.lead_coeff();
  REQUIRE(!c.is_rational());
  const UniPoly& m = c.defining_poly();
  REQUIRE(m.degree() == 2);
  CHECK(m.coeff(1).is_zero());
  CHECK(m.coeff(0) == m.coeff(2) * Rational(-2));
}

TEST_CASE("quadrant signs sort the branches") {
  Problem p = fixture("quadrant.prob");
  CertifyOptions opts = fast_opts();

  ActiveSetAnalysis inner = analyze_active_set(p, {}, opts);
  const CertifiedBranch* good = find_branch(inner, 1.0, std::sqrt(2.0));
  const CertifiedBranch* bad = find_branch(inner, 1.0, -std::sqrt(2.0));
  REQUIRE(good);
  REQUIRE(bad);
  CHECK(good->status == BranchStatus::certified);
  CHECK(bad->status == BranchStatus::real_infeasible);
  CHECK(bad->definitive_exclusion);

  ActiveSetAnalysis edge = analyze_active_set(p, {0}, opts);
  const CertifiedBranch* pos = find_branch(edge, 1.0, 1.0);
  const CertifiedBranch* neg = find_branch(edge, 1.0, -1.0);
  REQUIRE(pos);
  REQUIRE(neg);
  CHECK(pos->status == BranchStatus::certified);
  CHECK(pos->lambda.kind == ExtValue::Kind::PosInf);
  CHECK(neg->status == BranchStatus::real_infeasible);

  // both constraints active pins the origin, which reaches no sphere
  ActiveSetAnalysis corner = analyze_active_set(p, {0, 1}, opts);
  CHECK(corner.skipped);
  CHECK(corner.branches.empty());
}

TEST_CASE("lifted parabola-plus-abs yields the known branch triple") {
  Problem p = fixture("example1.prob");
  CertifyOptions opts = fast_opts();

  ActiveSetAnalysis inner = analyze_active_set(p, {}, opts);
  const CertifiedBranch* para = find_branch(inner, 2.0, 1.0);
  const CertifiedBranch* plus = find_branch(inner, 1.0, 1.0);
  const CertifiedBranch* minus = find_branch(inner, 1.0, -1.0);
  REQUIRE(para);
  REQUIRE(plus);
  REQUIRE(minus);

  CHECK(para->status == BranchStatus::certified);
  CHECK(para->lambda.kind == ExtValue::Kind::PosInf);
  REQUIRE(para->expansion.exact);
  REQUIRE(para->expansion.terms.size() == 2);  // w = u + 1/4 exactly
  CHECK(para->expansion.terms[1].s_exp.is_zero());
  CHECK(para->expansion.terms[1].coeff == AlgebraicNumber(Rational(1, 4)));

  CHECK(plus->status == BranchStatus::certified);
  CHECK(plus->lambda.kind == ExtValue::Kind::PosInf);
  // w = -t lives on the z < 0 half of the lifted fold
  CHECK(minus->status == BranchStatus::real_infeasible);
  CHECK(minus->definitive_exclusion);

  ActiveSetAnalysis fold = analyze_active_set(p, {0}, opts);
  const CertifiedBranch* sq = find_branch(fold, 2.0, 1.0);
  REQUIRE(sq);
  CHECK(sq->status == BranchStatus::certified);
  CHECK(sq->lambda.kind == ExtValue::Kind::PosInf);

  // the lifting equality has gradient zero on its fold line
  bool flagged = false;
  for (const auto& n : fold.notes) flagged = flagged || n.find("rank-deficient") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("hyperbola-with-abs has a certified branch decaying to zero") {
  Problem p = fixture("example3.prob");
  CertifyOptions opts = fast_opts();

  ActiveSetAnalysis inner = analyze_active_set(p, {}, opts);
  REQUIRE(!inner.skipped);
  const CertifiedBranch* decay = nullptr;
  for (const auto& b : inner.branches)
    if (b.status == BranchStatus::certified && b.lambda.is_finite() && b.lambda.v.sign() == 0)
      decay = &b;
  REQUIRE(decay);
  CHECK(decay->expansion.exp_t().to_double() < 0.0);
  CHECK(!decay->is_constant);

  ActiveSetAnalysis fold = analyze_active_set(p, {0}, opts);
  CHECK(fold.skipped);
}

TEST_CASE("critical values of the fixtures") {
  CertifyOptions opts = fast_opts();

  SUBCASE("linear objective has no stationary points") {
    CriticalAnalysis cv = critical_values_for(fixture("example2.prob"), {}, opts);
    CHECK(cv.empty);
    CHECK(cv.values.empty());
  }

  SUBCASE("quadrant corner is the only stationary point") {
    Problem p = fixture("quadrant.prob");
    CHECK(critical_values_for(p, {}, opts).empty);
    CHECK(critical_values_for(p, {0}, opts).empty);
    CriticalAnalysis corner = critical_values_for(p, {0, 1}, opts);
    REQUIRE(!corner.empty);
    REQUIRE(corner.values.size() == 1);
    CHECK(corner.values[0].value == AlgebraicNumber(Rational(0)));
    CHECK(corner.values[0].certified);
    REQUIRE(corner.values[0].witness.size() >= 2);
    CHECK(std::fabs(corner.values[0].witness[0]) < 1e-6);
    CHECK(std::fabs(corner.values[0].witness[1]) < 1e-6);
  }

  SUBCASE("lifted parabola is stationary only at the fold origin") {
    Problem p = fixture("example1.prob");
    CHECK(critical_values_for(p, {}, opts).empty);
    CriticalAnalysis fold = critical_values_for(p, {0}, opts);
    REQUIRE(!fold.empty);
    REQUIRE(fold.values.size() == 1);
    CHECK(fold.values[0].value == AlgebraicNumber(Rational(0)));
    CHECK(fold.values[0].certified);
  }

  SUBCASE("lifted hyperbola is stationary only at the fold with value one") {
    Problem p = fixture("example3.prob");
    CHECK(critical_values_for(p, {}, opts).empty);
    CriticalAnalysis fold = critical_values_for(p, {0}, opts);
    REQUIRE(!fold.empty);
    REQUIRE(fold.values.size() == 1);
    CHECK(fold.values[0].value == AlgebraicNumber(Rational(1)));
    CHECK(fold.values[0].certified);
  }
}
