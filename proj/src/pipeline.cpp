#include "tangentinf/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "tangentinf/errors.hpp"
#include "tangentinf/systems.hpp"

namespace tangentinf {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void stamp(Report& R, const Problem& p, const RunConfig& cfg, const std::vector<double>& radii) {
  R.problem = p;
  R.mode = mode_name(cfg.mode);
  R.seed = cfg.oracle.seed;
  R.starts = cfg.oracle.starts;
  R.radii = radii;
  R.depth_used = cfg.depth;
  R.r_effective = radii.back();
  R.version = kVersion;
}

// Empty-set conventions: the infimum over nothing is +infinity, attainment
// fails, compactness is moot, growth conditions hold vacuously.
void empty_set_verdicts(Verdicts& v) {
  v.bounded_below = true;
  v.attains_infimum = false;
  v.solution_set_compact = Compactness::not_applicable;
  v.coercive = true;
  v.optimal.value = ExtValue::pos_inf();
  v.optimal.approx = kInf;
}

double best_feasible(const std::vector<SphereSample>& samples, bool* any) {
  double best = kInf;
  for (const auto& s : samples)
    if (s.feasible) best = std::min(best, s.psi);
  if (any) *any = std::isfinite(best);
  return best;
}

// S fits inside the sphere of radius `failed_radius`, so the minimum exists
// and the sweep below estimates it: a geometric pass over inner spheres, then
// two linear refinements around the best one.
void run_bounded_domain(Report& R, const Problem& p, const RunConfig& cfg, double failed_radius) {
  R.domain_unbounded = false;
  std::vector<double> grid;
  for (int k = 15; k >= 0; --k) grid.push_back(failed_radius * std::pow(0.5, k));
  R.psi = psi_grid(p, grid, cfg.oracle);

  bool any = false;
  double best = best_feasible(R.psi, &any);
  if (!any) {
    empty_set_verdicts(R.verdicts);
    R.caveats.push_back(
        "no feasible point found on any sampled sphere; the feasible set looks empty and the "
        "empty-set conventions apply");
    return;
  }

  for (int pass = 0; pass < 2; ++pass) {
    double t_best = failed_radius;
    for (const auto& s : R.psi)
      if (s.feasible && s.psi == best) t_best = s.t;
    double lo = t_best * 0.5, hi = std::min(t_best * 1.5, failed_radius);
    std::vector<double> fine;
    for (int k = 0; k < 9; ++k) fine.push_back(lo + (hi - lo) * k / 8.0);
    auto extra = psi_grid(p, fine, cfg.oracle);
    R.psi.insert(R.psi.end(), extra.begin(), extra.end());
    best = best_feasible(R.psi, &any);
  }
  std::sort(R.psi.begin(), R.psi.end(),
            [](const SphereSample& a, const SphereSample& b) { return a.t < b.t; });

  Verdicts& v = R.verdicts;
  v.bounded_below = true;
  v.attains_infimum = true;
  v.solution_set_compact = Compactness::yes;
  v.coercive = true;
  v.optimal.estimate_only = true;
  v.optimal.approx = best;
  R.justifications.push_back({"bounded-below",
                              "the feasible set is bounded and the objective is continuous",
                              "no feasible point on the sphere of radius " + fmt(failed_radius)});
  R.justifications.push_back(
      {"attainment", "a continuous function attains its minimum on a nonempty compact set",
       "feasible sweep minimum " + fmt(best)});
  R.justifications.push_back(
      {"compactness", "the solution set is closed inside a bounded feasible set", ""});
  R.justifications.push_back(
      {"coercivity", "no feasible sequence escapes to infinity, so growth holds vacuously", ""});
  R.caveats.push_back(
      "optimal value is a numeric estimate from a sphere sweep inside radius " +
      fmt(failed_radius) + "; tangency analysis was skipped because the feasible set is bounded");
}

// No symbolic stage at all: fit psi ~ a * t^alpha over a dense grid and read
// the verdicts off the fit. Everything is tagged heuristic.
void run_numeric(Report& R, const Problem& p, const RunConfig& cfg,
                 const std::vector<double>& radii) {
  R.verdicts.heuristic = true;
  DomainCheck dc = check_unbounded_domain(p, radii, cfg.oracle);
  R.domain_unbounded = dc.unbounded;
  if (!dc.unbounded) {
    run_bounded_domain(R, p, cfg, dc.failed_radius);
    R.verdicts.heuristic = true;
    return;
  }

  double r0 = radii.front(), r1 = radii.back();
  if (!(r1 > r0)) r1 = r0 * 100.0;
  const int n = 9;
  std::vector<double> grid;
  for (int k = 0; k < n; ++k) grid.push_back(r0 * std::pow(r1 / r0, double(k) / (n - 1)));
  R.psi = psi_grid(p, grid, cfg.oracle);

  std::vector<SphereSample> feas;
  for (const auto& s : R.psi)
    if (s.feasible) feas.push_back(s);
  Verdicts& v = R.verdicts;
  if (feas.empty()) {
    empty_set_verdicts(v);
    v.heuristic = true;
    R.caveats.push_back(
        "no feasible point found on any sampled sphere; the feasible set looks empty and the "
        "empty-set conventions apply");
    return;
  }

  size_t lo_at = 0;
  for (size_t i = 1; i < feas.size(); ++i)
    if (feas[i].psi < feas[lo_at].psi) lo_at = i;
  double lo = feas[lo_at].psi;

  LeadingFit fit = fit_leading_term(feas);
  v.bounded_below = !(fit.ok && fit.alpha > 1e-6 && fit.a < 0);
  v.coercive = fit.ok && fit.alpha > 1e-6 && fit.a > 0;
  v.attains_infimum = v.bounded_below && lo_at + 1 < feas.size();
  if (!v.attains_infimum)
    v.solution_set_compact = Compactness::not_applicable;
  else if (feas.back().psi > lo + 1e-6 * (1.0 + std::fabs(lo)))
    v.solution_set_compact = Compactness::yes;
  else
    v.solution_set_compact = Compactness::no;
  if (v.bounded_below) {
    v.optimal.estimate_only = true;
    v.optimal.approx = lo;
  } else {
    v.optimal.value = ExtValue::neg_inf();
    v.optimal.approx = -kInf;
  }
  if (fit.ok)
    R.justifications.push_back({"growth-fit", "sphere minima fit a power law a * t^alpha",
                                "alpha " + fmt(fit.alpha) + ", a " + fmt(fit.a)});
  else
    R.caveats.push_back("sphere minima change sign or fit no power law; growth read from the "
                        "raw samples only");
  R.caveats.push_back("verdicts are heuristic: numeric mode runs no symbolic certification");
}

Justification infeasible_note() {
  return {"feasibility", "a constant constraint is violated, so the feasible set is empty", ""};
}

}  // namespace

const char* mode_name(RunConfig::Mode m) {
  switch (m) {
    case RunConfig::Mode::symbolic: return "symbolic";
    case RunConfig::Mode::numeric: return "numeric";
    default: return "hybrid";
  }
}

RunConfig::Mode mode_from_name(const std::string& name) {
  if (name == "symbolic") return RunConfig::Mode::symbolic;
  if (name == "numeric") return RunConfig::Mode::numeric;
  if (name == "hybrid") return RunConfig::Mode::hybrid;
  throw Error("unknown mode '" + name + "' (expected symbolic, numeric, or hybrid)");
}

Report run(const Problem& p, const RunConfig& cfg) {
  auto t0 = Clock::now();
  if (cfg.radii.empty()) throw Error("at least one certification radius is required");
  if (cfg.depth < 1) throw Error("expansion depth must be positive");
  std::vector<double> radii = cfg.radii;
  std::sort(radii.begin(), radii.end());
  for (double t : radii)
    if (!(t > 0.0)) throw Error("certification radii must be positive");

  Report R;
  stamp(R, p, cfg, radii);

  if (p.trivially_infeasible) {
    empty_set_verdicts(R.verdicts);
    R.domain_unbounded = false;
    R.caveats.push_back("the feasible set is empty: a constant constraint is violated");
    R.justifications.push_back(infeasible_note());
    R.elapsed_ms = ms_since(t0);
    return R;
  }

  CertifyOptions copt;
  copt.radii = radii;
  copt.depth = cfg.depth;
  copt.max_depth = cfg.max_depth;
  copt.max_radius = cfg.max_radius;
  copt.numeric_certification = cfg.mode != RunConfig::Mode::symbolic;
  copt.elim.budget = cfg.gb_budget;
  copt.elim.force_resultants = cfg.force_resultants;
  copt.oracle = cfg.oracle;

  if (p.objective.is_constant()) {
    Rational c = p.objective.constant_value();
    Verdicts& v = R.verdicts;
    v.bounded_below = true;
    v.attains_infimum = true;
    v.coercive = false;
    v.optimal.value = ExtValue::finite(c);
    v.optimal.approx = c.to_double();
    R.justifications.push_back(
        {"bounded-below", "the objective is constant", c.to_string()});
    R.justifications.push_back({"attainment", "every feasible point is optimal", ""});
    R.justifications.push_back({"coercivity", "a constant objective never grows", ""});
    if (cfg.mode == RunConfig::Mode::symbolic) {
      v.solution_set_compact = Compactness::no;
      R.caveats.push_back("feasible set assumed unbounded (symbolic mode skips the domain "
                          "probe); compactness reported accordingly");
    } else {
      DomainCheck dc = check_unbounded_domain(p, radii, cfg.oracle);
      R.domain_unbounded = dc.unbounded;
      v.solution_set_compact = dc.unbounded ? Compactness::no : Compactness::yes;
      if (!dc.unbounded && dc.witnesses.empty())
        R.caveats.push_back("no feasible point found on any probed sphere; if the feasible set "
                            "is empty these verdicts do not apply");
    }
    R.caveats.push_back("constant objective: tangency analysis skipped");
    R.elapsed_ms = ms_since(t0);
    return R;
  }

  if (cfg.mode == RunConfig::Mode::numeric) {
    run_numeric(R, p, cfg, radii);
    R.elapsed_ms = ms_since(t0);
    return R;
  }

  bool feasible_seen = false;
  if (cfg.mode == RunConfig::Mode::hybrid) {
    DomainCheck dc = check_unbounded_domain(p, radii, cfg.oracle);
    R.domain_unbounded = dc.unbounded;
    feasible_seen = !dc.witnesses.empty();
    if (!dc.unbounded) {
      run_bounded_domain(R, p, cfg, dc.failed_radius);
      R.elapsed_ms = ms_since(t0);
      return R;
    }
  } else {
    R.caveats.push_back("feasible-set unboundedness assumed, not checked (symbolic mode)");
  }

  bool degenerate = false;
  auto active_sets = enumerate_active_sets(int(p.inequalities.size()));
  for (const auto& J : active_sets) {
    try {
      R.tangency.push_back(analyze_active_set(p, J, copt));
    } catch (const NonGenericSystemError& e) {
      degenerate = true;
      R.caveats.push_back("tangency analysis skipped on active set " + active_set_name(J) +
                          ": " + e.what() + "; verdicts conditional on regularity");
    }
    try {
      R.criticals.push_back(critical_values_for(p, J, copt));
    } catch (const NonGenericSystemError& e) {
      degenerate = true;
      R.caveats.push_back("critical values skipped on active set " + active_set_name(J) + ": " +
                          e.what() + "; verdicts conditional on regularity");
    }
  }

  std::vector<CertifiedBranch> branches;
  for (const auto& a : R.tangency) {
    R.used_fallback = R.used_fallback || a.used_fallback;
    R.complex_branches += a.complex_count;
    R.depth_used = std::max(R.depth_used, a.depth_used);
    R.r_effective = std::max(R.r_effective, a.r_effective);
    for (const auto& n : a.notes) R.caveats.push_back(n);
    for (const auto& b : a.branches) {
      if (!b.witness.empty()) feasible_seen = true;
      branches.push_back(b);
    }
  }
  CriticalSummary cs;
  for (const auto& c : R.criticals) {
    R.used_fallback = R.used_fallback || c.used_fallback;
    for (const auto& n : c.notes) R.caveats.push_back(n);
    for (const auto& cv : c.values) {
      if (!cv.certified) continue;
      if (!cv.witness.empty()) feasible_seen = true;
      ExtValue e = ExtValue::finite(cv.value);
      if (cs.empty || ExtValue::compare(e, cs.min_value) < 0) cs.min_value = e;
      cs.empty = false;
    }
  }
  R.critical_summary = cs;

  Verdicts v = decide(branches, cs, &R.justifications, &R.caveats);
  v.conditional = degenerate;

  // A real but uncertified branch may still belong to the feasible tangency
  // set; if counting it in would change any verdict, say so.
  for (size_t i = 0; i < branches.size(); ++i) {
    const CertifiedBranch& b = branches[i];
    if (b.status == BranchStatus::certified) continue;
    if (!b.certified_real || b.definitive_exclusion) continue;
    std::vector<CertifiedBranch> what_if = branches;
    what_if[i].status = BranchStatus::certified;
    Verdicts v2 = decide(what_if, cs, nullptr, nullptr);
    if (!same_verdicts(v, v2)) {
      v.conditional = true;
      R.caveats.push_back("branch " + b.expansion.describe() + " on active set " +
                          active_set_name(b.active) +
                          " is real but lacks a feasibility witness; counting it in would "
                          "change the verdicts");
    }
  }
  if (cfg.mode == RunConfig::Mode::symbolic)
    R.caveats.push_back("branch feasibility and sign conditions not certified (symbolic mode); "
                        "extraneous elimination branches may weaken the verdicts");

  assert_lattice(v, feasible_seen);
  R.verdicts = v;

  if (cfg.mode == RunConfig::Mode::hybrid) {
    R.psi = psi_grid(p, radii, cfg.oracle);
    int need = std::max(1, cfg.oracle.starts / 4);
    for (const auto& s : R.psi) {
      if (!s.feasible) continue;
      if (s.agreement < need)
        R.caveats.push_back("sphere minimum at t = " + fmt(s.t) + " reached by only " +
                            std::to_string(s.agreement) + " of " +
                            std::to_string(cfg.oracle.starts) +
                            " starts; the global minimum may have been missed");
    }
    // The lower envelope of the certified branches must track psi.
    for (const auto& s : R.psi) {
      if (!s.feasible) continue;
      double env = kInf;
      for (const auto& a : R.tangency) {
        for (const auto& b : a.branches) {
          if (b.status != BranchStatus::certified) continue;
          double sres = kInf;
          double y = polish_curve_root(a.curve, s.t * s.t,
                                       b.expansion.approx_at_radius(s.t), 60, &sres);
          if (std::isfinite(y) && sres <= 1e-6) env = std::min(env, y);
        }
      }
      if (std::isfinite(env) && std::fabs(env - s.psi) > 1e-3 * (1.0 + std::fabs(s.psi)))
        R.caveats.push_back("sphere minimum " + fmt(s.psi) + " at t = " + fmt(s.t) +
                            " does not match the certified branch envelope " + fmt(env));
    }
    if (v.bounded_below && !R.psi.empty()) {
      double opt = v.optimal.approx;
      if (v.optimal.value.is_finite()) {
        for (const auto& s : R.psi)
          if (s.feasible && opt > s.psi + 1e-6 * (1.0 + std::fabs(s.psi)))
            R.caveats.push_back("claimed optimal value " + fmt(opt) +
                                " exceeds the sampled sphere minimum " + fmt(s.psi) +
                                " at t = " + fmt(s.t));
        const SphereSample& last = R.psi.back();
        if (!v.attains_infimum && last.feasible &&
            std::fabs(last.psi - opt) > 1e-2 * (1.0 + std::fabs(opt)))
          R.caveats.push_back("infimum is not attained, yet the sphere minimum at the largest "
                              "radius (" + fmt(last.psi) + ") has not approached it (" +
                              fmt(opt) + ")");
      }
    }
  }

  R.elapsed_ms = ms_since(t0);
  return R;
}

Report run_file(const std::string& path, const RunConfig& cfg) {
  return run(Problem::load(path), cfg);
}

}  // namespace tangentinf
