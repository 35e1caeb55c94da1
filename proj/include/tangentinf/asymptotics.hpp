#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tangentinf/algebraic.hpp"
#include "tangentinf/elimination.hpp"
#include "tangentinf/oracle.hpp"
#include "tangentinf/problem.hpp"
#include "tangentinf/puiseux.hpp"
#include "tangentinf/systems.hpp"

namespace tangentinf {

// How a raw expansion branch fared under numeric certification.
//   certified: real on the curve and witnessed by a sign-valid tangency point
//   real_infeasible: real on the curve but every witness violates a sign
//   no_witness: real on the curve yet no tangency solution matches its value
//     (the classic shape of an extraneous elimination factor)
enum class BranchStatus { certified, real_infeasible, no_witness };

struct CertifiedBranch {
  std::vector<int> active;
  PuiseuxBranch expansion;
  ExtValue lambda;
  bool is_constant = false;        // value provably constant along the branch
  bool certified_real = false;
  bool certified_feasible = false;
  BranchStatus status = BranchStatus::no_witness;
  // wide-margin sign violations rule a branch out definitively; borderline
  // ones leave the verdicts conditional
  bool definitive_exclusion = false;
  std::vector<double> witness;            // tangency solution at witness_radius
  double witness_radius = 0.0;
  double witness_mu = 0.0;
  std::vector<std::pair<double, double>> values_at;  // (t, curve value) per radius
  std::string note;
};

struct ActiveSetAnalysis {
  std::vector<int> active;
  bool skipped = false;            // nothing on this active set reaches infinity
  std::string skip_reason;
  MultiPoly curve{2};              // plane curve in (u, w), u = squared radius
  bool used_fallback = false;
  long complex_count = 0;
  int depth_used = 0;
  double r_effective = 0.0;        // largest radius at which certification held
  std::vector<CertifiedBranch> branches;
  std::vector<std::string> notes;
};

struct CriticalValue {
  AlgebraicNumber value;
  bool certified = false;          // a sign-valid critical point attains it
  std::vector<double> witness;     // solution of the critical system
};

struct CriticalAnalysis {
  std::vector<int> active;
  bool empty = false;              // critical set empty on this active set
  bool used_fallback = false;
  std::vector<CriticalValue> values;
  std::vector<std::string> notes;
};

struct CertifyOptions {
  std::vector<double> radii{1e2, 1e3, 1e4};
  int depth = 4;                   // expansion terms; see max_depth
  int max_depth = 8;               // raised to this when a finite limit stays unresolved
  double max_radius = 1e6;         // escalation bound before an inconsistency error
  bool numeric_certification = true;  // off in symbolic-only runs
  EliminationOptions elim;
  OracleConfig oracle;
};

// "{0,2}" style label for an active set, used across reports and messages.
std::string active_set_name(const std::vector<int>& J);

// Limit of the branch value as the radius grows, read off the expansion:
// a growing leading term settles the sign at infinity, otherwise the limit
// is the constant-term coefficient (zero when the expansion has none).
ExtValue limit_of(const PuiseuxBranch& b);

// True when the curve provably contains the full horizontal line w = c for
// the single-term constant expansion b (divisibility, exact arithmetic).
bool proves_constant_line(const MultiPoly& curve, const PuiseuxBranch& b);

// Tangency pipeline for one active set: build the system, eliminate to the
// plane curve, expand at infinity, certify each branch at the radii.
// Escalates radii tenfold up to max_radius when nothing certifies while the
// tangency variety is numerically nonempty; throws InconsistencyError when
// even that fails.
ActiveSetAnalysis analyze_active_set(const Problem& p, const std::vector<int>& J,
                                     const CertifyOptions& opt);

// Critical values on one active set: eliminate the critical system to a
// univariate polynomial in the value, isolate its real roots, and keep the
// ones attained by a sign-valid numeric critical point.
CriticalAnalysis critical_values_for(const Problem& p, const std::vector<int>& J,
                                     const CertifyOptions& opt);

}  // namespace tangentinf
