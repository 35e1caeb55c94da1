#include "tangentinf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tangentinf/errors.hpp"

namespace tangentinf {

std::string active_set_name(const std::vector<int>& J) {
  std::string s = "{";
  for (size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i]);
  }
  return s + "}";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct SignCheck {
  bool valid = true;
  bool definitive = false;  // some sign fails by a wide margin
};

// Inactive inequalities must hold at the point and active multipliers must be
// nonnegative; equality and active rows are already zero by the solve.
SignCheck check_signs(const Problem& p, const SystemLayout& L, const std::vector<int>& J,
                      const std::vector<double>& sol) {
  SignCheck out;
  std::vector<double> x(sol.begin(), sol.begin() + p.nvars());
  std::vector<bool> active(p.inequalities.size(), false);
  for (int j : J) active[j] = true;
  auto flag = [&](double v, double scale) {
    if (v < -1e-6 * scale) {
      out.valid = false;
      if (v < -1e-3 * scale) out.definitive = true;
    }
  };
  for (size_t j = 0; j < p.inequalities.size(); ++j) {
    if (active[j]) continue;
    CompiledPoly h(p.inequalities[j]);
    flag(h.eval(x), 1.0 + h.row_scale(x));
  }
  for (size_t j = 0; j < J.size(); ++j) {
    double v = sol[L.nu(static_cast<int>(j))];
    flag(v, 1.0 + std::abs(v));
  }
  return out;
}

struct RadiusData {
  double t = 0.0;
  std::vector<NumericSolution> sols;
  std::vector<SignCheck> signs;
};

// Starts for radius t continued from the previous radii: every solution at t1
// verbatim and rescaled both ways by its scale exponent, plus per-coordinate
// power-law extrapolation through sign-matched pairs across (t2, t1). Branch
// coordinates behave like c*t^alpha with alpha of either sign, so a matched
// pair pins alpha and the start lands on the continued solution.
std::vector<std::vector<double>> continuation_starts(const std::vector<std::vector<double>>& prev2,
                                                     double t2,
                                                     const std::vector<std::vector<double>>& prev1,
                                                     double t1, double t,
                                                     const std::vector<int>& exps) {
  std::vector<std::vector<double>> starts;
  if (prev1.empty() || t1 <= 0.0) return starts;
  int n = static_cast<int>(exps.size());

  double jump = t / t1;
  for (const auto& s : prev1) {
    starts.push_back(s);
    std::vector<double> up = s, dn = s;
    for (int i = 0; i < n; ++i) {
      double r = std::pow(jump, exps[i]);
      up[i] *= r;
      dn[i] /= r;
    }
    starts.push_back(std::move(up));
    starts.push_back(std::move(dn));
  }

  if (prev2.empty() || t2 <= 0.0) return starts;
  double base = std::log(t1 / t2);
  if (!(base > 0.0)) return starts;
  for (const auto& s1 : prev1) {
    int paired = 0;
    for (const auto& s0 : prev2) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (std::abs(s0[i]) < 1e-12 || std::abs(s1[i]) < 1e-12) continue;  // wildcard
        ok = (s0[i] > 0.0) == (s1[i] > 0.0);
      }
      if (!ok) continue;
      std::vector<double> ex(n);
      for (int i = 0; i < n; ++i) {
        double a = std::abs(s0[i]), b = std::abs(s1[i]);
        double alpha = 0.0;
        if (a > 1e-300 && b > 1e-300) {
          alpha = std::clamp(std::log(b / a) / base, -6.0, 6.0);
        }
        ex[i] = s1[i] * std::pow(t / t1, alpha);
      }
      starts.push_back(std::move(ex));
      if (++paired >= 4) break;
    }
  }
  return starts;
}

}  // namespace

ExtValue limit_of(const PuiseuxBranch& b) {
  if (b.terms.empty()) return ExtValue::finite(Rational(0));
  const PuiseuxTerm& lead = b.terms.front();
  int s = lead.s_exp.sign();
  if (s < 0) {
    return lead.coeff.sign() > 0 ? ExtValue::pos_inf() : ExtValue::neg_inf();
  }
  if (s == 0) return ExtValue::finite(lead.coeff);
  return ExtValue::finite(Rational(0));
}

bool proves_constant_line(const MultiPoly& curve, const PuiseuxBranch& b) {
  if (!b.terms.empty() && (b.terms.size() != 1 || b.terms.front().s_exp.sign() != 0))
    return false;
  AlgebraicNumber c = b.terms.empty() ? AlgebraicNumber(Rational(0)) : b.terms.front().coeff;
  if (c.is_rational()) {
    MultiPoly at = curve.substitute(1, MultiPoly::constant(2, c.rational_value()));
    return at.is_zero();
  }
  // w = c with conjugates: the whole minimal polynomial must divide the curve
  MultiPoly m = to_multipoly(c.defining_poly(), 2, 1);
  try {
    divide_exact(curve, m);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ActiveSetAnalysis analyze_active_set(const Problem& p, const std::vector<int>& J,
                                     const CertifyOptions& opt) {
  ActiveSetAnalysis out;
  out.active = J;

  SystemLayout L;
  PolySystem sys = build_tangency_system(p, J, &L);
  PlaneCurve pc = eliminate_to_plane_curve(sys, opt.elim);
  out.used_fallback = pc.used_fallback;
  out.curve = pc.curve;
  if (pc.curve.is_constant()) {
    out.skipped = true;
    out.skip_reason = "no tangency points reach infinity on this active set";
    return out;
  }

  int depth = std::max(1, opt.depth);
  PuiseuxResult pr = expand_at_infinity(pc.curve, depth);
  bool unresolved_tail = false;
  for (const auto& b : pr.branches) {
    if (!b.exact && !b.terms.empty() && b.terms.front().s_exp.sign() >= 0)
      unresolved_tail = true;
  }
  if (unresolved_tail && opt.max_depth > depth) {
    depth = opt.max_depth;
    pr = expand_at_infinity(pc.curve, depth);
  }
  out.depth_used = depth;
  out.complex_count = pr.complex_count;

  std::vector<double> radii = opt.radii;
  std::sort(radii.begin(), radii.end());

  for (;;) {
    out.branches.clear();

    std::vector<RadiusData> rd;
    if (opt.numeric_certification) {
      std::vector<int> exps(sys.nvars(), 0);
      for (int i = 0; i < p.nvars(); ++i) exps[L.x(i)] = 1;
      exps[L.u()] = 2;
      exps[L.w()] = 2;

      // Solutions from the previous two radii drive the continuation starts.
      std::vector<std::vector<double>> prev1, prev2;
      double t1 = 0.0, t2 = 0.0;
      for (double t : radii) {
        RadiusData d;
        d.t = t;
        std::vector<double> scales(sys.nvars(), 1.0);
        for (int i = 0; i < p.nvars(); ++i) scales[L.x(i)] = t;
        scales[L.w()] = t * t;

        std::vector<std::vector<double>> starts =
            continuation_starts(prev2, t2, prev1, t1, t, exps);
        d.sols = solve_system_numeric(sys, opt.oracle, L.u(), t * t, scales, starts);
        d.signs.reserve(d.sols.size());
        for (const auto& s : d.sols) d.signs.push_back(check_signs(p, L, J, s.x));

        prev2 = std::move(prev1);
        t2 = t1;
        prev1.clear();
        for (const auto& s : d.sols) prev1.push_back(s.x);
        t1 = t;
        rd.push_back(std::move(d));
      }
    }

    for (const auto& b : pr.branches) {
      CertifiedBranch cb;
      cb.active = J;
      cb.expansion = b;
      cb.lambda = limit_of(b);
      bool single_constant_term =
          b.terms.empty() || (b.terms.size() == 1 && b.terms.front().s_exp.sign() == 0);
      if (single_constant_term && proves_constant_line(pc.curve, b)) cb.is_constant = true;

      if (!opt.numeric_certification) {
        cb.certified_real = true;  // coefficients are real algebraic by construction
        cb.status = BranchStatus::certified;
        cb.note = "feasibility not certified (no numeric stage)";
        out.branches.push_back(std::move(cb));
        continue;
      }

      bool real_ok = true;
      bool feasible_all = true;
      bool matched_all = true;
      bool all_definitive = true;
      for (const auto& d : rd) {
        double pred = b.approx_at_radius(d.t);
        double sres = 1.0;
        double y = polish_curve_root(pc.curve, d.t * d.t, pred, 60, &sres);
        if (!std::isfinite(y) || sres > 1e-8 ||
            std::abs(y - pred) > 5e-2 * (1.0 + std::abs(pred))) {
          real_ok = false;
          break;
        }
        cb.values_at.emplace_back(d.t, y);

        bool matched = false;
        bool valid_here = false;
        bool definitive_here = true;
        for (size_t i = 0; i < d.sols.size(); ++i) {
          double ws = d.sols[i].x[L.w()];
          if (std::abs(ws - y) > 1e-4 * (1.0 + std::abs(y))) continue;
          matched = true;
          definitive_here = definitive_here && d.signs[i].definitive;
          if (d.signs[i].valid && !valid_here) {
            valid_here = true;
            cb.witness = d.sols[i].x;
            cb.witness_radius = d.t;
            cb.witness_mu = d.sols[i].x[L.mu()];
          }
        }
        if (!matched) {
          matched_all = false;
          feasible_all = false;
          all_definitive = false;
        } else if (!valid_here) {
          feasible_all = false;
          all_definitive = all_definitive && definitive_here;
        }
      }

      cb.certified_real = real_ok;
      cb.certified_feasible = real_ok && feasible_all;
      if (!real_ok) {
        cb.status = BranchStatus::no_witness;
        cb.note = "expansion did not converge onto the curve";
      } else if (cb.certified_feasible) {
        cb.status = BranchStatus::certified;
      } else if (matched_all) {
        cb.status = BranchStatus::real_infeasible;
        cb.definitive_exclusion = all_definitive;
      } else {
        cb.status = BranchStatus::no_witness;
        cb.note = "no tangency solution matches this value";
      }
      out.branches.push_back(std::move(cb));
    }

    if (!opt.numeric_certification) break;

    bool any_certified = false;
    for (const auto& cb : out.branches)
      any_certified = any_certified || cb.status == BranchStatus::certified;
    if (any_certified) {
      out.r_effective = radii.back();
      break;
    }

    bool variety_nonempty = false;
    if (!rd.empty()) {
      for (const auto& sc : rd.back().signs) variety_nonempty = variety_nonempty || sc.valid;
    }
    if (!variety_nonempty) break;  // nothing real and feasible out there; fine

    bool within_bound = true;
    for (double& t : radii) {
      t *= 10.0;
      if (t > opt.max_radius * (1.0 + 1e-9)) within_bound = false;
    }
    if (!within_bound) {
      throw InconsistencyError("no branch certified on active set " + active_set_name(J) +
                               " although the tangency variety is numerically nonempty");
    }
    out.notes.push_back("certification radii escalated to top radius t = " +
                        fmt(radii.back()));
  }

  bool licq_noted = false;
  for (const auto& cb : out.branches) {
    if (cb.witness.empty()) continue;
    std::vector<double> x(cb.witness.begin(), cb.witness.begin() + p.nvars());
    double sv = licq_min_singular(p, x, 1e-6);
    if (sv < 1e-6 && !licq_noted) {
      out.notes.push_back("rank-deficient active gradients at a witness on active set " +
                          active_set_name(J) + " (min singular value " + fmt(sv) +
                          "); verdicts conditional on regularity");
      licq_noted = true;
    }
    if (cb.is_constant && std::abs(cb.witness_mu) > 1e-3) {
      out.notes.push_back("constant-value branch witness carries a nonzero sphere multiplier (" +
                          fmt(cb.witness_mu) + ") on active set " + active_set_name(J));
    }
  }
  return out;
}

CriticalAnalysis critical_values_for(const Problem& p, const std::vector<int>& J,
                                     const CertifyOptions& opt) {
  CriticalAnalysis out;
  out.active = J;

  SystemLayout L;
  PolySystem sys = build_critical_system(p, J, &L);
  CriticalValues cv = eliminate_to_critical_values(sys, opt.elim);
  out.used_fallback = cv.used_fallback;
  if (cv.values.is_constant()) {
    out.empty = true;
    return out;
  }

  std::vector<RealRoot> roots = real_roots(cv.values, Rational(1L, 1000000000000L));
  for (const auto& r : roots) {
    CriticalValue v;
    v.value = r.is_rational ? AlgebraicNumber(r.value)
                            : AlgebraicNumber::from_root(cv.values, r.lo, r.hi);
    if (opt.numeric_certification) {
      std::vector<double> scales(sys.nvars(), 1.0);
      for (int i = 0; i < p.nvars(); ++i) scales[L.x(i)] = 10.0;
      std::vector<NumericSolution> sols =
          solve_system_numeric(sys, opt.oracle, L.w(), v.value.to_double(), scales);
      for (const auto& s : sols) {
        if (check_signs(p, L, J, s.x).valid) {
          v.certified = true;
          v.witness = s.x;  // solutions arrive lex-sorted, so this is the lex-min one
          break;
        }
      }
    } else {
      v.certified = true;
    }
    out.values.push_back(std::move(v));
  }
  if (out.values.empty()) out.empty = true;
  return out;
}

}  // namespace tangentinf
