#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tangentinf/errors.hpp"
#include "tangentinf/verdict.hpp"

using namespace tangentinf;

namespace {

CertifiedBranch br(ExtValue lambda, BranchStatus st = BranchStatus::certified,
                   bool constant = false) {
  CertifiedBranch b;
  b.lambda = std::move(lambda);
  b.status = st;
  b.is_constant = constant;
  b.certified_real = true;
  b.certified_feasible = st == BranchStatus::certified;
  return b;
}

CriticalSummary crit(long v) {
  CriticalSummary c;
  c.min_value = ExtValue::finite(Rational(v));
  c.empty = false;
  return c;
}

}  // namespace

TEST_CASE("all limits at +infinity with a stationary floor: coercive and compact") {
  std::vector<CertifiedBranch> bs{br(ExtValue::pos_inf()), br(ExtValue::pos_inf())};
  std::vector<Justification> js;
  std::vector<std::string> cv;
  Verdicts v = decide(bs, crit(0), &js, &cv);
  CHECK(v.bounded_below);
  CHECK(v.attains_infimum);
  CHECK(v.coercive);
  CHECK(v.solution_set_compact == Compactness::yes);
  REQUIRE(v.optimal.value.is_finite());
  CHECK(v.optimal.value.v.sign() == 0);
  CHECK(!v.optimal.estimate_only);
  CHECK(js.size() >= 4);
  CHECK(lattice_holds(v));
}

TEST_CASE("one certified sinking branch drags the infimum to -infinity") {
  std::vector<CertifiedBranch> bs{br(ExtValue::pos_inf()), br(ExtValue::neg_inf())};
  Verdicts v = decide(bs, crit(3), nullptr, nullptr);
  CHECK(!v.bounded_below);
  CHECK(v.optimal.value.kind == ExtValue::Kind::NegInf);
  CHECK(!v.attains_infimum);
  CHECK(!v.coercive);
  CHECK(v.solution_set_compact == Compactness::not_applicable);
  CHECK(lattice_holds(v));
}

TEST_CASE("uncertified branches carry no weight") {
  std::vector<CertifiedBranch> bs{br(ExtValue::pos_inf()),
                                  br(ExtValue::neg_inf(), BranchStatus::real_infeasible),
                                  br(ExtValue::finite(Rational(-5)), BranchStatus::no_witness)};
  Verdicts v = decide(bs, crit(0), nullptr, nullptr);
  CHECK(v.bounded_below);
  CHECK(v.coercive);
  REQUIRE(v.optimal.value.is_finite());
  CHECK(v.optimal.value.v.sign() == 0);
}

TEST_CASE("a finite limit below the stationary floor blocks attainment") {
  std::vector<CertifiedBranch> bs{br(ExtValue::finite(Rational(0)))};
  Verdicts v = decide(bs, crit(1), nullptr, nullptr);
  CHECK(v.bounded_below);
  CHECK(!v.attains_infimum);
  CHECK(!v.coercive);
  CHECK(v.solution_set_compact == Compactness::not_applicable);
  REQUIRE(v.optimal.value.is_finite());
  CHECK(v.optimal.value.v.sign() == 0);
  CHECK(lattice_holds(v));
}

TEST_CASE("empty critical set means nothing is attained") {
  std::vector<CertifiedBranch> bs{br(ExtValue::finite(Rational(2)))};
  Verdicts v = decide(bs, CriticalSummary{}, nullptr, nullptr);
  CHECK(v.bounded_below);
  CHECK(!v.attains_infimum);
  REQUIRE(v.optimal.value.is_finite());
  CHECK(v.optimal.value.v == AlgebraicNumber(Rational(2)));
}

TEST_CASE("a constant branch at the floor makes the solution set escape") {
  std::vector<CertifiedBranch> bs{br(ExtValue::finite(Rational(0)), BranchStatus::certified, true),
                                  br(ExtValue::pos_inf())};
  Verdicts v = decide(bs, crit(0), nullptr, nullptr);
  CHECK(v.attains_infimum);  // constant branches never block attainment
  CHECK(v.solution_set_compact == Compactness::no);
  CHECK(lattice_holds(v));

  std::vector<CertifiedBranch> above{
      br(ExtValue::finite(Rational(5)), BranchStatus::certified, true)};
  Verdicts v2 = decide(above, crit(0), nullptr, nullptr);
  CHECK(v2.attains_infimum);
  CHECK(v2.solution_set_compact == Compactness::yes);
}

TEST_CASE("no branches leaves the stationary floor in charge, vacuously coercive") {
  Verdicts v = decide({}, crit(7), nullptr, nullptr);
  CHECK(v.bounded_below);
  CHECK(v.attains_infimum);
  CHECK(v.coercive);
  CHECK(v.solution_set_compact == Compactness::yes);
  REQUIRE(v.optimal.value.is_finite());
  CHECK(v.optimal.value.v == AlgebraicNumber(Rational(7)));
}

TEST_CASE("no branches and no critical points leaves +infinity and a caveat") {
  std::vector<std::string> cv;
  Verdicts v = decide({}, CriticalSummary{}, nullptr, &cv);
  CHECK(v.bounded_below);
  CHECK(!v.attains_infimum);
  CHECK(v.optimal.value.kind == ExtValue::Kind::PosInf);
  REQUIRE(!cv.empty());
  CHECK(!lattice_holds(v));  // the empty-set conventions break coercive => attains
  CHECK_NOTHROW(assert_lattice(v, false));
  CHECK_THROWS_AS(assert_lattice(v, true), InconsistencyError);
}

TEST_CASE("the implication lattice rejects impossible mixes") {
  Verdicts good;
  good.bounded_below = true;
  good.attains_infimum = true;
  good.coercive = true;
  good.solution_set_compact = Compactness::yes;
  CHECK(lattice_holds(good));

  Verdicts bad = good;
  bad.attains_infimum = false;
  bad.solution_set_compact = Compactness::not_applicable;
  CHECK(!lattice_holds(bad));  // coercive without attainment
  CHECK_THROWS_AS(assert_lattice(bad, true), InconsistencyError);
  CHECK_NOTHROW(assert_lattice(bad, false));

  Verdicts bad2;
  bad2.attains_infimum = true;
  bad2.bounded_below = false;
  CHECK(!lattice_holds(bad2));

  Verdicts bad3;
  bad3.bounded_below = true;
  bad3.attains_infimum = false;
  bad3.solution_set_compact = Compactness::yes;
  CHECK(!lattice_holds(bad3));
}

TEST_CASE("verdict equality tracks decisions and the optimal value") {
  Verdicts a;
  a.bounded_below = true;
  a.attains_infimum = true;
  a.solution_set_compact = Compactness::yes;
  a.optimal.value = ExtValue::finite(Rational(1));
  Verdicts b = a;
  CHECK(same_verdicts(a, b));

  b.coercive = !a.coercive;
  CHECK(!same_verdicts(a, b));

  b = a;
  b.optimal.value = ExtValue::finite(Rational(2));
  CHECK(!same_verdicts(a, b));

  b = a;
  b.optimal.value = ExtValue::neg_inf();
  CHECK(!same_verdicts(a, b));
}
