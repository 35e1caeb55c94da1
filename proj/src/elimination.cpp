#include "tangentinf/elimination.hpp"

#include <algorithm>

#include "tangentinf/errors.hpp"
#include "tangentinf/groebner.hpp"
#include "tangentinf/resultant.hpp"

namespace tangentinf {

namespace {

void push_unique(std::vector<MultiPoly>& v, MultiPoly p) {
  if (p.is_zero()) return;
  p = p.primitive_normalized();
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(std::move(p));
}

// Cheap growth control for the resultant cascade: strip numeric content and
// repeated factors (in the lowest variable the polynomial actually uses).
MultiPoly reduce_output(MultiPoly p) {
  if (p.is_zero() || p.is_constant()) return p;
  int v = 0;
  while (!p.uses_var(v)) ++v;
  if (p.degree_in(v) >= 2) p = squarefree_in(p, v);
  return p.primitive_normalized();
}

// Necessary conditions on the remaining variables after eliminating `var`
// from the pool by pairwise resultants against a fixed pivot.
std::vector<MultiPoly> eliminate_var_resultants(std::vector<MultiPoly> polys, int var) {
  std::vector<MultiPoly> rest, using_v;
  for (auto& p : polys)
    (p.degree_in(var) > 0 ? using_v : rest).push_back(std::move(p));
  if (using_v.empty()) return rest;
  if (using_v.size() == 1) return rest;  // solve-for-var component, projection is free

  // Pivot: minimal degree in var, then fewest terms, then first.
  size_t best = 0;
  for (size_t i = 1; i < using_v.size(); ++i) {
    int di = using_v[i].degree_in(var), db = using_v[best].degree_in(var);
    if (di < db || (di == db && using_v[i].size() < using_v[best].size())) best = i;
  }
  MultiPoly pivot = using_v[best];
  for (size_t i = 0; i < using_v.size(); ++i) {
    if (i == best) continue;
    MultiPoly r = resultant(using_v[i], pivot, var);
    if (r.is_zero()) {
      // Shared factor; the cofactor still yields a nonzero condition.
      MultiPoly g = poly_gcd(using_v[i], pivot);
      if (!g.is_constant()) {
        MultiPoly cof = divide_exact(using_v[i], g);
        if (cof.degree_in(var) > 0) r = resultant(cof, pivot, var);
      }
    }
    if (!r.is_zero()) push_unique(rest, reduce_output(std::move(r)));
  }
  return rest;
}

}  // namespace

std::vector<MultiPoly> eliminate_kept(const PolySystem& sys,
                                      const EliminationOptions& opt,
                                      bool* used_fallback) {
  int n = sys.nvars();
  bool fell = opt.force_resultants;

  std::vector<MultiPoly> gens;
  if (!fell) {
    try {
      StepBudget budget(opt.budget);
      TermOrder ord = TermOrder::block(sys.keep_from);
      std::vector<MultiPoly> basis = groebner_basis(sys.polys, ord, budget);
      for (auto& b : basis)
        if (b.supported_in(sys.keep_from, n)) push_unique(gens, std::move(b));
    } catch (const BudgetExceededError&) {
      gens.clear();
      fell = true;
    }
  }

  if (fell) {
    std::vector<MultiPoly> polys;
    for (const auto& p : sys.polys) push_unique(polys, p);
    // Multipliers first (they enter linearly), then the problem variables.
    std::vector<int> order;
    for (int v = sys.mult_from; v < sys.keep_from; ++v) order.push_back(v);
    for (int v = 0; v < sys.mult_from; ++v) order.push_back(v);
    for (int v : order) {
      polys = eliminate_var_resultants(std::move(polys), v);
      // A nonzero constant certifies emptiness; stop early on it.
      for (const auto& p : polys)
        if (p.is_constant() && !p.is_zero()) {
          if (used_fallback) *used_fallback = true;
          return {MultiPoly::constant(n - sys.keep_from, Rational(1))};
        }
    }
    gens = std::move(polys);
  }
  if (used_fallback) *used_fallback = fell;

  // Remap survivors onto a ring over the kept variables only.
  std::vector<int> map(n, -1);
  for (int v = sys.keep_from; v < n; ++v) map[v] = v - sys.keep_from;
  std::vector<MultiPoly> out;
  for (const auto& g : gens) {
    if (!g.supported_in(sys.keep_from, n)) continue;  // fallback leftovers
    push_unique(out, g.remap(n - sys.keep_from, map));
  }
  return out;
}

PlaneCurve eliminate_to_plane_curve(const PolySystem& sys, const EliminationOptions& opt) {
  PlaneCurve res;
  std::vector<MultiPoly> gens = eliminate_kept(sys, opt, &res.used_fallback);
  if (gens.empty())
    throw NonGenericSystemError("no relation between radius and value survived elimination");
  for (const auto& g : gens)
    if (g.is_constant()) {
      res.curve = MultiPoly::constant(2, Rational(1));  // no solutions anywhere
      return res;
    }
  MultiPoly P = gens[0];
  for (size_t i = 1; i < gens.size(); ++i) P = poly_gcd(P, gens[i]);
  if (P.is_constant()) {
    // Coprime generators: solutions exist only at finitely many radii, so
    // nothing survives to u -> infinity.
    res.curve = MultiPoly::constant(2, Rational(1));
    return res;
  }
  // Drop radius-only content (vertical lines carry no value information).
  auto wcoeffs = coefficients_in(P, 1);
  MultiPoly content(2);
  for (const auto& c : wcoeffs) content = poly_gcd(content, c);
  if (!content.is_constant()) P = divide_exact(P, content);
  if (P.degree_in(1) < 1)
    throw NonGenericSystemError("elimination constrained only the radius, not the value");
  if (P.degree_in(1) >= 2) P = squarefree_in(P, 1);
  res.curve = P.primitive_normalized();
  return res;
}

CriticalValues eliminate_to_critical_values(const PolySystem& sys,
                                            const EliminationOptions& opt) {
  CriticalValues res;
  std::vector<MultiPoly> gens = eliminate_kept(sys, opt, &res.used_fallback);
  if (gens.empty())
    throw NonGenericSystemError("no univariate relation on the critical value survived");
  std::vector<UniPoly> qs;
  for (const auto& g : gens) {
    if (g.is_constant() && !g.is_zero()) {
      res.values = UniPoly::constant(Rational(1));  // empty critical set
      return res;
    }
    qs.push_back(to_unipoly(g, 0));
  }
  UniPoly q = qs[0];
  for (size_t i = 1; i < qs.size(); ++i) q = unipoly_gcd(q, qs[i]);
  if (q.is_constant()) {
    res.values = UniPoly::constant(Rational(1));
    return res;
  }
  res.values = squarefree_part(q);
  return res;
}

}  // namespace tangentinf
