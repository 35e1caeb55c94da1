#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangentinf/asymptotics.hpp"
#include "tangentinf/oracle.hpp"
#include "tangentinf/problem.hpp"
#include "tangentinf/verdict.hpp"

namespace tangentinf {

struct RunConfig {
  enum class Mode { symbolic, numeric, hybrid };
  Mode mode = Mode::hybrid;
  std::vector<double> radii{1e2, 1e3, 1e4};
  OracleConfig oracle;
  long gb_budget = 1000000;
  bool force_resultants = false;
  int depth = 4;      // expansion terms, raised to max_depth on demand
  int max_depth = 8;
  double max_radius = 1e6;
};

const char* mode_name(RunConfig::Mode m);
RunConfig::Mode mode_from_name(const std::string& name);

struct Report {
  Problem problem;
  Verdicts verdicts;
  std::vector<ActiveSetAnalysis> tangency;
  std::vector<CriticalAnalysis> criticals;
  CriticalSummary critical_summary;
  std::vector<SphereSample> psi;
  std::vector<std::string> caveats;
  std::vector<Justification> justifications;

  std::string mode;
  std::uint64_t seed = 0;
  int starts = 0;
  std::vector<double> radii;
  int depth_used = 0;
  double r_effective = 0.0;
  bool domain_unbounded = true;
  bool used_fallback = false;
  long complex_branches = 0;
  double elapsed_ms = 0.0;
  std::string version;
};

// The whole story: load -> unboundedness probe -> active sets -> tangency
// and critical eliminations -> expansion -> certification -> verdicts.
// Throws BudgetExceededError when symbolic budgets run out and
// InconsistencyError when symbolic and numeric answers cannot be reconciled.
Report run(const Problem& p, const RunConfig& cfg);
Report run_file(const std::string& path, const RunConfig& cfg);

}  // namespace tangentinf
