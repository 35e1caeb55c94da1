#pragma once

#include <cstdint>
#include <vector>

#include "tangentinf/multipoly.hpp"
#include "tangentinf/problem.hpp"
#include "tangentinf/systems.hpp"

namespace tangentinf {

struct OracleConfig {
  int starts = 64;
  std::uint64_t seed = 0;
  int max_iters = 500;
  double penalty_init = 10.0;
  double penalty_ratio = 10.0;
  int penalty_rounds = 4;
  double tol_feas = 1e-9;
  double tol_grad = 1e-9;
};

// One sphere-restricted minimization: psi is the best feasible value found on
// {g = 0, h >= 0, |x_orig| = t}; lifted variables float free of the sphere.
struct SphereSample {
  double t = 0.0;
  double psi = 0.0;
  std::vector<double> minimizer;
  double feas_residual = 0.0;  // worst constraint or sphere violation
  int agreement = 0;           // starts whose value matched psi within 1e-6 relative
  bool feasible = false;       // false: no start reached a feasible sphere point
};

// Flat double evaluator for one polynomial; gradient terms are derived from
// the exponents on the fly, so one compiled object serves value and gradient.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  int nvars() const { return nvars_; }
  double eval(const std::vector<double>& x) const;
  // g += w * gradient(p)(x)
  void add_gradient(const std::vector<double>& x, double w, std::vector<double>& g) const;
  // sum of absolute term magnitudes at x; the cancellation mass that scales
  // how small a residual double arithmetic can witness
  double row_scale(const std::vector<double>& x) const;

 private:
  struct Term {
    double c = 0.0;
    std::vector<std::pair<int, int>> pows;  // (variable, exponent > 0)
  };
  int nvars_ = 0;
  std::vector<Term> terms_;
};

SphereSample sample_psi(const Problem& p, double t, const OracleConfig& cfg);

// Sequential sweep over increasing radii, warm-starting each sphere from the
// previous minimizer.
std::vector<SphereSample> psi_grid(const Problem& p, const std::vector<double>& radii,
                                   const OracleConfig& cfg);

struct DomainCheck {
  bool unbounded = false;
  double failed_radius = 0.0;  // first radius whose sphere missed S (when !unbounded)
  std::vector<std::vector<double>> witnesses;
};

// Evidence that S is unbounded: a feasible point on every listed sphere.
DomainCheck check_unbounded_domain(const Problem& p, const std::vector<double>& radii,
                                   const OracleConfig& cfg);

struct NumericSolution {
  std::vector<double> x;          // full coordinate vector of the system
  double residual = 0.0;          // max |row|
  double scaled_residual = 0.0;   // max |row| / (1 + row mass)
};

// Multi-start damped Newton on a square polynomial system (least-squares step
// when the shape is off). fixed_var pins one coordinate, e.g. the radius
// variable of a tangency system to t^2. scales stretch the random starts per
// variable; empty means unit scale. extra_starts are tried before the random
// ones, e.g. to continue solutions found at a neighboring radius.
std::vector<NumericSolution> solve_system_numeric(
    const PolySystem& sys, const OracleConfig& cfg, int fixed_var = -1, double fixed_value = 0.0,
    const std::vector<double>& scales = {},
    const std::vector<std::vector<double>>& extra_starts = {});

// Smallest singular value of the active constraint gradients at x; +inf when
// nothing is active. Small values flag a likely qualification failure.
double licq_min_singular(const Problem& p, const std::vector<double>& x, double active_tol);

struct LeadingFit {
  double alpha = 0.0;
  double a = 0.0;
  bool ok = false;
};

// Log-log regression of |psi| against t over the samples with a consistent
// sign; recovers psi ~ a * t^alpha.
LeadingFit fit_leading_term(const std::vector<SphereSample>& samples);

// Univariate Newton in w on the curve at fixed u; returns the polished root
// and its scaled residual.
double polish_curve_root(const MultiPoly& curve, double u, double w0, int iters,
                         double* scaled_residual);

}  // namespace tangentinf
