#pragma once

#include "tangentinf/systems.hpp"
#include "tangentinf/unipoly.hpp"

namespace tangentinf {

struct EliminationOptions {
  long budget = 1000000;        // rewrite steps before the fallback kicks in
  bool force_resultants = false;
};

// Generators of (a superset of) the projection of V(sys) onto the kept
// variables, remapped to a ring over just those variables. The Groebner
// route computes the exact elimination ideal; on budget exhaustion the
// iterated-resultant route yields necessary conditions only, which is sound
// here because every downstream consumer prunes spurious solutions
// numerically. Duplicate-free; a constant nonzero generator means the
// system has no solutions at all.
std::vector<MultiPoly> eliminate_kept(const PolySystem& sys,
                                      const EliminationOptions& opt,
                                      bool* used_fallback);

struct PlaneCurve {
  MultiPoly curve{2};   // ring {u, w} with u = 0, w = 1
  bool used_fallback = false;
};

// Plane curve traced in (u, w) by the system's solutions: the gcd of the
// kept-variable generators, with radius-only content removed and repeated
// factors in w dropped. Factors in w alone survive (they are the constant
// branches). A constant curve means nothing reaches u -> infinity.
PlaneCurve eliminate_to_plane_curve(const PolySystem& sys, const EliminationOptions& opt);

struct CriticalValues {
  UniPoly values;       // squarefree in w; constant when the critical set is empty
  bool used_fallback = false;
};

CriticalValues eliminate_to_critical_values(const PolySystem& sys,
                                            const EliminationOptions& opt);

}  // namespace tangentinf
