#include "tangentinf/verdict.hpp"

#include <limits>

#include "tangentinf/errors.hpp"

namespace tangentinf {

namespace {

std::string branch_blurb(const CertifiedBranch& b) {
  return "active set " + active_set_name(b.active) + ", value " + b.expansion.describe() +
         ", limit " + b.lambda.to_string();
}

void note(std::vector<Justification>* out, const std::string& criterion,
          const std::string& because, const std::string& inputs) {
  if (out) out->push_back({criterion, because, inputs});
}

void caveat(std::vector<std::string>* out, const std::string& text) {
  if (out) out->push_back(text);
}

}  // namespace

Verdicts decide(const std::vector<CertifiedBranch>& branches, const CriticalSummary& cs,
                std::vector<Justification>* justifications,
                std::vector<std::string>* caveats_out) {
  Verdicts v;
  std::vector<const CertifiedBranch*> cert;
  for (const auto& b : branches) {
    if (b.status == BranchStatus::certified) cert.push_back(&b);
  }

  // boundedness: a growing branch with a negative leading coefficient is the
  // only way down to -infinity
  const CertifiedBranch* culprit = nullptr;
  for (const auto* b : cert) {
    if (b->lambda.kind == ExtValue::Kind::NegInf) culprit = b;
  }
  v.bounded_below = culprit == nullptr;
  if (culprit) {
    note(justifications, "bounded-below",
         "a certified branch descends to -infinity along the feasible set",
         branch_blurb(*culprit));
  } else {
    note(justifications, "bounded-below",
         "every certified branch either grows upward or has a finite limit, and the "
         "critical value set is finite",
         "branches checked: " + std::to_string(cert.size()));
  }

  bool ties = false;

  // optimal value: min over the certified critical values and branch limits
  if (!v.bounded_below) {
    v.optimal.value = ExtValue::neg_inf();
    v.optimal.approx = -std::numeric_limits<double>::infinity();
    note(justifications, "optimal-value", "unbounded below, so the infimum is -infinity",
         branch_blurb(*culprit));
  } else {
    ExtValue best = cs.min_value;
    std::string src = cs.empty ? "critical set empty (its minimum counts as +infinity)"
                               : "min critical value " + cs.min_value.to_string();
    for (const auto* b : cert) {
      bool resolved = true;
      if (ExtValue::compare(b->lambda, best, &resolved) < 0) best = b->lambda;
      ties = ties || !resolved;
    }
    v.optimal.value = best;
    v.optimal.approx = best.to_double();
    note(justifications, "optimal-value",
         "minimum of the certified critical values and the certified branch limits",
         src + "; branch limits considered: " + std::to_string(cert.size()));
    if (v.optimal.value.kind == ExtValue::Kind::PosInf) {
      caveat(caveats_out,
             "no finite candidate for the optimal value; the feasible set may be empty");
    }
  }

  // attainment: some critical point must sit at or below every escape route
  ExtValue min_nonconst = ExtValue::pos_inf();
  for (const auto* b : cert) {
    if (b->is_constant) continue;
    bool resolved = true;
    if (ExtValue::compare(b->lambda, min_nonconst, &resolved) < 0) min_nonconst = b->lambda;
    ties = ties || !resolved;
  }
  if (cs.empty) {
    v.attains_infimum = false;
    note(justifications, "attainment", "the critical set is empty, so no feasible point is stationary",
         "min non-constant branch limit " + min_nonconst.to_string());
  } else {
    bool resolved = true;
    int cmp = ExtValue::compare(cs.min_value, min_nonconst, &resolved);
    ties = ties || !resolved;
    v.attains_infimum = cmp <= 0;
    note(justifications, "attainment",
         v.attains_infimum
             ? "the critical set is nonempty and its minimum does not exceed any "
               "non-constant branch limit"
             : "a non-constant branch limit lies strictly below every critical value, so "
               "minimizing sequences escape to infinity",
         "min critical value " + cs.min_value.to_string() + " vs min non-constant branch limit " +
             min_nonconst.to_string());
  }

  // compactness of the solution set
  if (!v.attains_infimum) {
    v.solution_set_compact = Compactness::not_applicable;
    note(justifications, "compactness", "the infimum is not attained", "");
  } else {
    ExtValue min_const = ExtValue::pos_inf();
    for (const auto* b : cert) {
      if (!b->is_constant) continue;
      bool resolved = true;
      if (ExtValue::compare(b->lambda, min_const, &resolved) < 0) min_const = b->lambda;
      ties = ties || !resolved;
    }
    bool resolved = true;
    int cmp = ExtValue::compare(cs.min_value, min_const, &resolved);
    ties = ties || !resolved;
    v.solution_set_compact = cmp < 0 ? Compactness::yes : Compactness::no;
    note(justifications, "compactness",
         cmp < 0 ? "the minimum critical value sits strictly below every constant branch value"
                 : "a constant-value branch meets the optimal value, so minimizers occur at "
                   "arbitrarily large radii",
         "min critical value " + cs.min_value.to_string() + " vs min constant branch value " +
             min_const.to_string());
  }

  // coercivity: nothing at infinity stays below any level
  const CertifiedBranch* flat = nullptr;
  for (const auto* b : cert) {
    if (b->lambda.kind != ExtValue::Kind::PosInf) flat = b;
  }
  v.coercive = flat == nullptr;
  note(justifications, "coercivity",
       v.coercive ? "every certified branch limit is +infinity"
                  : "a certified branch has a limit below +infinity",
       flat ? branch_blurb(*flat) : "branches checked: " + std::to_string(cert.size()));

  if (ties) {
    v.optimal.tie_unresolved = true;
    caveat(caveats_out,
           "an exact comparison between two algebraic values did not resolve within the "
           "refinement cap; the midpoint order decided (tie unresolved)");
  }
  return v;
}

bool lattice_holds(const Verdicts& v) {
  if (v.coercive && !(v.attains_infimum && v.bounded_below)) return false;
  if (v.attains_infimum && !v.bounded_below) return false;
  if (v.solution_set_compact == Compactness::yes && !v.attains_infimum) return false;
  return true;
}

void assert_lattice(const Verdicts& v, bool feasible_point_seen) {
  if (lattice_holds(v)) return;
  if (!feasible_point_seen) return;  // empty-set conventions break it vacuously
  throw InconsistencyError(
      "verdict implication lattice violated with a feasible point in hand; a branch or "
      "critical value was missed");
}

bool same_verdicts(const Verdicts& a, const Verdicts& b) {
  if (a.bounded_below != b.bounded_below) return false;
  if (a.attains_infimum != b.attains_infimum) return false;
  if (a.solution_set_compact != b.solution_set_compact) return false;
  if (a.coercive != b.coercive) return false;
  if (a.optimal.value.kind != b.optimal.value.kind) return false;
  if (a.optimal.value.is_finite() &&
      ExtValue::compare(a.optimal.value, b.optimal.value) != 0)
    return false;
  return true;
}

}  // namespace tangentinf
