#pragma once

#include <string>
#include <vector>

#include "tangentinf/algebraic.hpp"
#include "tangentinf/multipoly.hpp"
#include "tangentinf/rational.hpp"

namespace tangentinf {

// One term of a fractional-power series in s = 1/u. The value variable along
// the branch behaves like coeff * s^s_exp, i.e. coeff * t^(-2*s_exp) in the
// radius t with u = t^2.
struct PuiseuxTerm {
  Rational s_exp;
  AlgebraicNumber coeff;  // nonzero
};

// A branch of the plane curve P(u, w) = 0 at u -> +inf, expanded as a series
// w = sum coeff_k * s^(e_k) with strictly increasing rational exponents.
// Coefficients stay rational except possibly the last term; an irrational
// coefficient ends the computed expansion.
struct PuiseuxBranch {
  std::vector<PuiseuxTerm> terms;  // empty means w identically zero
  int multiplicity = 1;            // curve branches sharing this expansion
  bool exact = false;              // the series terminates with these terms
  bool separated = true;           // false: the shared prefix was not split apart

  Rational lead_s_exp() const { return terms.empty() ? Rational(0) : terms.front().s_exp; }
  // Growth exponent in the radius: w ~ lead_coeff * t^exp_t.
  Rational exp_t() const { return lead_s_exp() * Rational(-2); }
  AlgebraicNumber lead_coeff() const {
    return terms.empty() ? AlgebraicNumber(Rational(0)) : terms.front().coeff;
  }
  // Identically constant along the curve (includes the w = 0 branch).
  bool is_constant() const {
    return exact && (terms.empty() || (terms.size() == 1 && terms.front().s_exp.is_zero()));
  }

  double approx_at_radius(double t) const;
  std::string describe() const;
};

struct PuiseuxResult {
  std::vector<PuiseuxBranch> branches;  // real-leading branches, sorted by (exp_t desc, coeff)
  long complex_count = 0;               // series excluded for non-real coefficients, with multiplicity

  // Branches plus exclusions always account for the full w-degree of the curve.
  long total_multiplicity() const;
};

// Newton polygon expansion of the curve P(u, w) (vars u = 0, w = 1) at
// u -> +inf. Each branch carries at most max_terms terms; expansions that
// need more, or that hit an irrational coefficient before splitting from a
// sibling, are returned with separated = false so callers can retry deeper
// or fall back to numeric separation.
PuiseuxResult expand_at_infinity(const MultiPoly& curve, int max_terms = 4);

}  // namespace tangentinf
