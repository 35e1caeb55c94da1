#pragma once

#include "tangentinf/multipoly.hpp"

namespace tangentinf {

// Sylvester resultant of p and q with respect to `var`, eliminating it. Both
// must have positive degree in var. Computed fraction-free (Bareiss), so all
// intermediate divisions are exact.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

// Coefficients of p as a polynomial in `var`, constant term first; entries
// no longer use var.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var);

}  // namespace tangentinf
