#pragma once

#include <vector>

#include "tangentinf/errors.hpp"
#include "tangentinf/multipoly.hpp"

namespace tangentinf {

// Counts rewrite steps against a cap shared across a whole symbolic run.
struct StepBudget {
  long cap;
  long used = 0;
  explicit StepBudget(long cap_) : cap(cap_) {}
  void charge(const char* stage) {
    if (++used > cap) throw BudgetExceededError(stage, static_cast<std::uint64_t>(used));
  }
};

// Remainder of p on division by the basis; every term is reduced, and the
// result is integer-primitive. Each rewrite step charges the budget.
MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis,
                      const TermOrder& ord, StepBudget& budget);

// Reduced Groebner basis via Buchberger with the sugar selection strategy,
// the product criterion, and the chain criterion over processed pairs.
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens,
                                      const TermOrder& ord, StepBudget& budget);

}  // namespace tangentinf
