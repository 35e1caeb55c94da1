#include "tangentinf/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tangentinf/errors.hpp"

namespace tangentinf {

namespace {

using nlohmann::json;

// JSON has no infinities; encode them as strings and NaN as null.
json num(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return v;
}

json alg(const AlgebraicNumber& a) {
  json j;
  j["approx"] = a.to_double();
  if (a.is_rational()) {
    j["exact"] = a.rational_value().to_string();
  } else {
    j["minpoly"] = a.defining_poly().to_string("a");
    j["interval"] = {a.lower().to_string(), a.upper().to_string()};
  }
  return j;
}

json ext(const ExtValue& e) {
  json j;
  switch (e.kind) {
    case ExtValue::Kind::NegInf: j["kind"] = "-infinity"; break;
    case ExtValue::Kind::PosInf: j["kind"] = "+infinity"; break;
    case ExtValue::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = alg(e.v);
      break;
  }
  j["approx"] = num(e.to_double());
  return j;
}

json problem_json(const Problem& p) {
  json j;
  j["vars"] = p.vars;
  j["objective"] = p.objective.to_string(p.vars);
  json eqs = json::array();
  for (const auto& g : p.equalities) eqs.push_back(g.to_string(p.vars));
  j["equalities"] = eqs;
  json ineqs = json::array();
  for (const auto& h : p.inequalities) ineqs.push_back(h.to_string(p.vars));
  j["inequalities"] = ineqs;
  json lifts = json::array();
  for (const auto& l : p.liftings)
    lifts.push_back({{"var", p.vars[l.var]}, {"abs_of", l.expr.to_string(p.vars)}});
  j["liftings"] = lifts;
  j["regular"] = p.regular;
  j["source"] = p.source_path;
  j["trivially_infeasible"] = p.trivially_infeasible;
  return j;
}

json verdicts_json(const Verdicts& v) {
  json j;
  j["bounded_below"] = v.bounded_below;
  j["attains_infimum"] = v.attains_infimum;
  switch (v.solution_set_compact) {
    case Compactness::yes: j["solution_set_compact"] = "yes"; break;
    case Compactness::no: j["solution_set_compact"] = "no"; break;
    case Compactness::not_applicable: j["solution_set_compact"] = "n/a"; break;
  }
  j["coercive"] = v.coercive;
  json opt;
  if (v.optimal.estimate_only) {
    opt["kind"] = "finite";
    opt["approx"] = num(v.optimal.approx);
  } else {
    opt = ext(v.optimal.value);
  }
  opt["estimate_only"] = v.optimal.estimate_only;
  opt["tie_unresolved"] = v.optimal.tie_unresolved;
  j["optimal"] = opt;
  j["conditional"] = v.conditional;
  j["heuristic"] = v.heuristic;
  return j;
}

json branch_json(const CertifiedBranch& b) {
  json j;
  j["active_set"] = b.active;
  j["expansion"] = b.expansion.describe();
  j["alpha"] = {{"approx", b.expansion.exp_t().to_double()},
                {"exact", b.expansion.exp_t().to_string()}};
  j["leading_coeff"] = alg(b.expansion.lead_coeff());
  j["exact_series"] = b.expansion.exact;
  j["multiplicity"] = b.expansion.multiplicity;
  j["lambda"] = ext(b.lambda);
  j["is_constant"] = b.is_constant;
  j["status"] = status_name(b.status);
  j["certified_real"] = b.certified_real;
  j["certified_feasible"] = b.certified_feasible;
  j["definitive_exclusion"] = b.definitive_exclusion;
  if (!b.witness.empty()) {
    j["witness"] = b.witness;
    j["witness_radius"] = b.witness_radius;
    j["witness_mu"] = b.witness_mu;
  }
  json vals = json::array();
  for (const auto& tv : b.values_at) vals.push_back({tv.first, tv.second});
  j["values"] = vals;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json critical_json(const Report& R) {
  json j;
  j["empty"] = R.critical_summary.empty;
  j["min"] = R.critical_summary.empty ? json(nullptr) : ext(R.critical_summary.min_value);
  json rows = json::array();
  for (const auto& c : R.criticals) {
    for (const auto& v : c.values) {
      json r;
      r["active_set"] = c.active;
      r["value"] = alg(v.value);
      r["certified"] = v.certified;
      if (!v.witness.empty()) r["witness"] = v.witness;
      rows.push_back(r);
    }
  }
  j["values"] = rows;
  return j;
}

json meta_json(const Report& R) {
  json m;
  m["tool"] = "tangent-inf";
  m["version"] = R.version;
  m["mode"] = R.mode;
  m["seed"] = R.seed;
  m["starts"] = R.starts;
  m["radii"] = R.radii;
  m["depth"] = R.depth_used;
  m["r_effective"] = R.r_effective;
  m["domain_unbounded"] = R.domain_unbounded;
  m["elimination_fallback"] = R.used_fallback;
  m["complex_branches"] = R.complex_branches;
  m["timing_ms"] = R.elapsed_ms;
  json sets = json::array();
  for (const auto& a : R.tangency) {
    json s;
    s["active_set"] = a.active;
    s["skipped"] = a.skipped;
    if (!a.skip_reason.empty()) s["skip_reason"] = a.skip_reason;
    s["curve"] = a.curve.to_string({"u", "w"});
    s["used_fallback"] = a.used_fallback;
    s["complex_branches"] = a.complex_count;
    s["depth"] = a.depth_used;
    s["r_effective"] = a.r_effective;
    sets.push_back(s);
  }
  m["active_sets"] = sets;
  return m;
}

void atomic_write(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp(path + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

const char* status_name(BranchStatus s) {
  switch (s) {
    case BranchStatus::certified: return "certified";
    case BranchStatus::real_infeasible: return "real_infeasible";
    default: return "no_witness";
  }
}

json report_to_json(const Report& R) {
  json j;
  j["problem"] = problem_json(R.problem);
  j["verdicts"] = verdicts_json(R.verdicts);
  json branches = json::array();
  for (const auto& a : R.tangency)
    for (const auto& b : a.branches) branches.push_back(branch_json(b));
  j["branches"] = branches;
  j["critical_values"] = critical_json(R);
  json psi = json::array();
  for (const auto& s : R.psi) {
    json row;
    row["t"] = s.t;
    row["psi"] = num(s.psi);
    row["feasible"] = s.feasible;
    row["agreement"] = s.agreement;
    row["feas_residual"] = s.feas_residual;
    row["minimizer"] = s.minimizer;
    psi.push_back(row);
  }
  j["psi_samples"] = psi;
  j["caveats"] = R.caveats;
  json just = json::array();
  for (const auto& x : R.justifications)
    just.push_back({{"criterion", x.criterion}, {"because", x.because}, {"inputs", x.inputs}});
  j["justifications"] = just;
  j["meta"] = meta_json(R);
  return j;
}

std::string report_json_text(const Report& R) { return report_to_json(R).dump(2) + "\n"; }

void write_report_json(const Report& R, const std::string& path) {
  atomic_write(path, report_json_text(R));
}

void write_psi_csv(const Report& R, const std::string& path) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "t,psi,agreement\n";
  for (const auto& s : R.psi) os << s.t << "," << s.psi << "," << s.agreement << "\n";
  atomic_write(path, os.str());
}

std::string human_summary(const Report& R) {
  const Problem& p = R.problem;
  std::ostringstream os;
  os << p.source_path << ": " << p.vars.size() << " vars, " << p.equalities.size()
     << " equalities, " << p.inequalities.size() << " inequalities, " << p.liftings.size()
     << " lifted\n";
  os << "mode " << R.mode << ", seed " << R.seed << ", starts " << R.starts << ", radii";
  for (double t : R.radii) os << " " << t;
  os << "\n";
  const Verdicts& v = R.verdicts;
  os << "bounded below    " << yesno(v.bounded_below) << "\n";
  os << "attains infimum  " << yesno(v.attains_infimum) << "\n";
  os << "solution set     "
     << (v.solution_set_compact == Compactness::yes
             ? "compact"
             : v.solution_set_compact == Compactness::no ? "not compact" : "n/a")
     << "\n";
  os << "coercive         " << yesno(v.coercive) << "\n";
  os << "optimal value    ";
  if (v.optimal.estimate_only)
    os << "~" << v.optimal.approx << " (numeric estimate)";
  else if (v.optimal.value.kind == ExtValue::Kind::NegInf)
    os << "-infinity";
  else if (v.optimal.value.kind == ExtValue::Kind::PosInf)
    os << "+infinity";
  else
    os << v.optimal.value.to_string();
  if (v.optimal.tie_unresolved) os << " (tie unresolved)";
  os << "\n";
  if (v.conditional) os << "verdicts are conditional, see caveats\n";
  if (v.heuristic) os << "verdicts are heuristic (numeric mode)\n";

  long total = 0, cert = 0, infeas = 0, nowit = 0;
  for (const auto& a : R.tangency) {
    for (const auto& b : a.branches) {
      ++total;
      if (b.status == BranchStatus::certified) ++cert;
      else if (b.status == BranchStatus::real_infeasible) ++infeas;
      else ++nowit;
    }
  }
  os << "branches         " << total << " real (" << cert << " certified, " << infeas
     << " real-infeasible, " << nowit << " without witness), " << R.complex_branches
     << " complex excluded\n";
  if (R.critical_summary.empty)
    os << "critical values  none certified\n";
  else
    os << "critical values  min " << R.critical_summary.min_value.to_string() << "\n";
  if (!R.caveats.empty()) {
    os << "caveats:\n";
    for (const auto& c : R.caveats) os << "  - " << c << "\n";
  }
  return os.str();
}

}  // namespace tangentinf
