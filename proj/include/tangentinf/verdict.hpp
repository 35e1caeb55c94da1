#pragma once

#include <string>
#include <vector>

#include "tangentinf/algebraic.hpp"
#include "tangentinf/asymptotics.hpp"

namespace tangentinf {

struct Justification {
  std::string criterion;  // stable id, e.g. "bounded-below"
  std::string because;    // the rule that fired, in words
  std::string inputs;     // the values it fired on
};

enum class Compactness { yes, no, not_applicable };

struct OptimalValue {
  ExtValue value = ExtValue::pos_inf();
  bool estimate_only = false;  // numeric estimate, no exact value available
  double approx = 0.0;
  bool tie_unresolved = false;
};

struct Verdicts {
  bool bounded_below = false;
  bool attains_infimum = false;
  Compactness solution_set_compact = Compactness::not_applicable;
  bool coercive = false;
  OptimalValue optimal;
  bool conditional = false;  // an uncertified real branch could flip something
  bool heuristic = false;    // numeric-only run
};

struct CriticalSummary {
  ExtValue min_value = ExtValue::pos_inf();  // +infinity when the critical set is empty
  bool empty = true;
};

// The four decisions plus the optimal value, from branches with
// status == certified and the critical summary. The rules:
//   bounded below   iff no certified branch limit is -infinity
//   optimal value   =   min(min critical value, min branch limit), or -infinity
//   attains         iff critical set nonempty and its min <= every
//                       non-constant branch limit
//   compact         =   yes iff attains and the min critical value sits
//                       strictly below every constant branch limit
//   coercive        iff every certified branch limit is +infinity
// Comparisons are exact; an unresolved tie surfaces as a caveat and the
// midpoint order decides.
Verdicts decide(const std::vector<CertifiedBranch>& branches, const CriticalSummary& cs,
                std::vector<Justification>* justifications,
                std::vector<std::string>* caveats);

// Implication lattice (coercive => attains => bounded, compact => attains),
// checked after the fact. A break with a feasible point in hand means a
// missed branch or critical value; throws InconsistencyError. Without a
// feasible point the break is the empty-set convention at work, so it only
// returns false.
bool lattice_holds(const Verdicts& v);
void assert_lattice(const Verdicts& v, bool feasible_point_seen);

// True when the two verdict sets agree on all four decisions and the optimal
// value; used to detect whether an uncertified branch would flip anything.
bool same_verdicts(const Verdicts& a, const Verdicts& b);

}  // namespace tangentinf
