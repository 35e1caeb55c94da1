#pragma once

#include <string>
#include <vector>

#include "tangentinf/multipoly.hpp"

namespace tangentinf {

// var was introduced to stand for |expr|; the loader adds var^2 - expr^2 = 0
// and var >= 0 so the polynomial machinery never sees an absolute value.
struct Lifting {
  int var;
  MultiPoly expr;
};

// Minimize `objective` over S = {eq_i = 0, ineq_j >= 0} in R^nvars. Lifted
// variables are bookkeeping for absolute values: they carry no sphere term
// when the feasible set is intersected with |x| = t.
struct Problem {
  std::vector<std::string> vars;
  std::vector<bool> lifted;
  MultiPoly objective{0};
  std::vector<MultiPoly> equalities;
  std::vector<MultiPoly> inequalities;
  std::vector<Lifting> liftings;
  bool regular = false;
  bool trivially_infeasible = false;  // a constant constraint is violated
  std::string source_path;

  int nvars() const { return static_cast<int>(vars.size()); }
  int original_count() const;
  std::vector<int> original_vars() const;

  // Parses the line-oriented problem format:
  //   vars: x y z
  //   objective: x^2 + z
  //   eq: x + y - 1
  //   ineq: x
  //   lift: z abs(y)
  //   regular: true
  // '#' starts a comment, blank lines are skipped, unknown keys are errors
  // and `vars:` must appear before any key that parses a polynomial.
  static Problem load(const std::string& path);
  static Problem from_text(const std::string& text, const std::string& path = "<memory>");

  // Drops trivially satisfied constant constraints, flags violated ones,
  // deduplicates constraints up to positive scaling (and sign, for
  // equalities), and checks lifting sanity. load() calls this.
  void normalize();
};

}  // namespace tangentinf
