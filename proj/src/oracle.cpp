#include "tangentinf/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>

#include "tangentinf/errors.hpp"

namespace tangentinf {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// mt19937_64 output is pinned by the standard, and the uniform and Gaussian
// transforms below are hand-rolled, so identical seeds give identical streams
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix_seed(std::uint64_t seed, double salt) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &salt, sizeof(bits));
  return splitmix64(seed ^ splitmix64(bits));
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CompiledPoly::CompiledPoly(const MultiPoly& p) : nvars_(p.nvars()) {
  for (const auto& [mono, coef] : p.terms()) {
    Term t;
    t.c = coef.to_double();
    for (int v = 0; v < nvars_; ++v) {
      if (mono.e[v] > 0) t.pows.emplace_back(v, static_cast<int>(mono.e[v]));
    }
    terms_.push_back(std::move(t));
  }
}

double CompiledPoly::eval(const std::vector<double>& x) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double m = t.c;
    for (auto [v, e] : t.pows) {
      double b = x[v];
      for (int k = 0; k < e; ++k) m *= b;
    }
    acc += m;
  }
  return acc;
}

void CompiledPoly::add_gradient(const std::vector<double>& x, double w,
                                std::vector<double>& g) const {
  for (const auto& t : terms_) {
    for (size_t d = 0; d < t.pows.size(); ++d) {
      double m = w * t.c * t.pows[d].second;
      for (size_t j = 0; j < t.pows.size(); ++j) {
        auto [v, e] = t.pows[j];
        int rep = j == d ? e - 1 : e;
        for (int k = 0; k < rep; ++k) m *= x[v];
      }
      g[t.pows[d].first] += m;
    }
  }
}

double CompiledPoly::row_scale(const std::vector<double>& x) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double m = std::abs(t.c);
    for (auto [v, e] : t.pows) {
      double b = std::abs(x[v]);
      for (int k = 0; k < e; ++k) m *= b;
    }
    acc += m;
  }
  return acc;
}

namespace {

struct SphereCtx {
  const Problem* p = nullptr;
  double t = 0.0;
  CompiledPoly f;
  std::vector<CompiledPoly> g, h;
  std::vector<std::pair<int, CompiledPoly>> lifts;
  std::vector<int> orig;
};

SphereCtx make_ctx(const Problem& p, double t) {
  SphereCtx c;
  c.p = &p;
  c.t = t;
  c.f = CompiledPoly(p.objective);
  for (const auto& q : p.equalities) c.g.emplace_back(q);
  for (const auto& q : p.inequalities) c.h.emplace_back(q);
  for (const auto& l : p.liftings) c.lifts.emplace_back(l.var, CompiledPoly(l.expr));
  c.orig = p.original_vars();
  return c;
}

double orig_norm(const SphereCtx& c, const std::vector<double>& x) {
  double s = 0.0;
  for (int i : c.orig) s += x[i] * x[i];
  return std::sqrt(s);
}

void retract(const SphereCtx& c, std::vector<double>& x) {
  double n = orig_norm(c, x);
  if (n < 1e-12 * std::max(1.0, c.t)) {
    for (int i : c.orig) x[i] = 0.0;
    x[c.orig.front()] = c.t;
    return;
  }
  double s = c.t / n;
  for (int i : c.orig) x[i] *= s;
}

// worst violation: sphere deviation, |g|, and the negative part of h
double feas_measure(const SphereCtx& c, const std::vector<double>& x) {
  double m = std::abs(orig_norm(c, x) - c.t);
  for (const auto& q : c.g) m = std::max(m, std::abs(q.eval(x)));
  for (const auto& q : c.h) m = std::max(m, std::max(0.0, -q.eval(x)));
  return m;
}

bool is_feasible(const SphereCtx& c, const std::vector<double>& x, double tol_feas) {
  if (std::abs(orig_norm(c, x) - c.t) > tol_feas * c.t) return false;
  double lim = tol_feas * (1.0 + c.t);
  for (const auto& q : c.g) {
    if (std::abs(q.eval(x)) > lim) return false;
  }
  for (const auto& q : c.h) {
    if (-q.eval(x) > lim) return false;
  }
  return true;
}

double penalty_value(const SphereCtx& c, const std::vector<double>& x, double rho, bool with_f) {
  double acc = with_f ? c.f.eval(x) : 0.0;
  for (const auto& q : c.g) {
    double v = q.eval(x);
    acc += rho * v * v;
  }
  for (const auto& q : c.h) {
    double v = q.eval(x);
    if (v < 0.0) acc += rho * v * v;
  }
  return acc;
}

std::vector<double> penalty_grad(const SphereCtx& c, const std::vector<double>& x, double rho,
                                 bool with_f) {
  std::vector<double> grad(x.size(), 0.0);
  if (with_f) c.f.add_gradient(x, 1.0, grad);
  for (const auto& q : c.g) q.add_gradient(x, 2.0 * rho * q.eval(x), grad);
  for (const auto& q : c.h) {
    double v = q.eval(x);
    if (v < 0.0) q.add_gradient(x, 2.0 * rho * v, grad);
  }
  return grad;
}

// remove the radial component over the sphere block
void tangent_project(const SphereCtx& c, const std::vector<double>& x, std::vector<double>& g) {
  double dot = 0.0, nn = 0.0;
  for (int i : c.orig) {
    dot += g[i] * x[i];
    nn += x[i] * x[i];
  }
  if (nn <= 0.0) return;
  double s = dot / nn;
  for (int i : c.orig) g[i] -= s * x[i];
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// projected gradient descent with backtracking on f + rho * violations
void descend(const SphereCtx& c, std::vector<double>& x, double rho, bool with_f, int iters,
             double tol_grad) {
  double eta = 0.1 * std::max(1.0, c.t);
  double fx = penalty_value(c, x, rho, with_f);
  for (int it = 0; it < iters; ++it) {
    std::vector<double> d = penalty_grad(c, x, rho, with_f);
    tangent_project(c, x, d);
    double dn = norm2(d);
    if (!std::isfinite(dn) || dn <= tol_grad * (1.0 + std::abs(fx))) break;
    eta = std::min(eta * 1.5, 1e6);
    bool moved = false;
    for (int bt = 0; bt < 50; ++bt) {
      std::vector<double> xn = x;
      for (size_t i = 0; i < x.size(); ++i) xn[i] -= eta * d[i];
      retract(c, xn);
      double fn = penalty_value(c, xn, rho, with_f);
      if (std::isfinite(fn) && fn <= fx - 1e-4 * eta * dn * dn) {
        x = std::move(xn);
        fx = fn;
        moved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!moved) break;
  }
}

// Gauss-Newton polish of the stationarity-plus-feasibility system at x. The
// Jacobian is taken by central differences; the unknowns are x, one lambda per
// equality, one nu per active inequality, and the radial mu.
void kkt_polish(const SphereCtx& c, std::vector<double>& x) {
  int n = static_cast<int>(x.size());
  int m = static_cast<int>(c.g.size());
  std::vector<int> act;
  for (int j = 0; j < static_cast<int>(c.h.size()); ++j) {
    if (c.h[j].eval(x) <= 1e-6 * (1.0 + c.t)) act.push_back(j);
  }
  int q = static_cast<int>(act.size());
  int nv = n + m + q + 1;
  std::vector<char> is_orig(n, 0);
  for (int i : c.orig) is_orig[i] = 1;

  auto residual = [&](const std::vector<double>& v, std::vector<double>& r) {
    std::vector<double> pt(v.begin(), v.begin() + n);
    r.assign(nv, 0.0);
    std::vector<double> st(n, 0.0);
    c.f.add_gradient(pt, 1.0, st);
    for (int k = 0; k < m; ++k) c.g[k].add_gradient(pt, v[n + k], st);
    for (int j = 0; j < q; ++j) c.h[act[j]].add_gradient(pt, -v[n + m + j], st);
    double mu = v[nv - 1];
    for (int i = 0; i < n; ++i) r[i] = st[i] + (is_orig[i] ? mu * pt[i] : 0.0);
    for (int k = 0; k < m; ++k) r[n + k] = c.g[k].eval(pt);
    for (int j = 0; j < q; ++j) r[n + m + j] = c.h[act[j]].eval(pt);
    double sph = -c.t * c.t;
    for (int i : c.orig) sph += pt[i] * pt[i];
    r[n + m + q] = sph;
  };

  // multiplier initialization by least squares on the stationarity rows
  std::vector<double> v(nv, 0.0);
  std::copy(x.begin(), x.end(), v.begin());
  {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, m + q + 1);
    std::vector<double> col(n, 0.0);
    for (int k = 0; k < m + q; ++k) {
      std::fill(col.begin(), col.end(), 0.0);
      if (k < m) {
        c.g[k].add_gradient(x, 1.0, col);
      } else {
        c.h[act[k - m]].add_gradient(x, -1.0, col);
      }
      for (int i = 0; i < n; ++i) A(i, k) = col[i];
    }
    for (int i = 0; i < n; ++i) A(i, m + q) = is_orig[i] ? x[i] : 0.0;
    std::fill(col.begin(), col.end(), 0.0);
    c.f.add_gradient(x, 1.0, col);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) b(i) = -col[i];
    Eigen::VectorXd sol = A.colPivHouseholderQr().solve(b);
    for (int k = 0; k < m + q + 1; ++k) v[n + k] = sol(k);
  }

  std::vector<double> r;
  residual(v, r);
  double best = norm2(r);
  if (!std::isfinite(best)) return;
  std::vector<double> rp(nv), rm(nv);
  for (int it = 0; it < 30 && best > 1e-14 * (1.0 + c.t * c.t); ++it) {
    Eigen::MatrixXd J(nv, nv);
    for (int cidx = 0; cidx < nv; ++cidx) {
      double step = 1e-7 * (1.0 + std::abs(v[cidx]));
      std::vector<double> vp = v, vm = v;
      vp[cidx] += step;
      vm[cidx] -= step;
      residual(vp, rp);
      residual(vm, rm);
      for (int ridx = 0; ridx < nv; ++ridx) J(ridx, cidx) = (rp[ridx] - rm[ridx]) / (2.0 * step);
    }
    residual(v, r);
    Eigen::VectorXd rhs(nv);
    for (int i = 0; i < nv; ++i) rhs(i) = -r[i];
    Eigen::VectorXd delta = J.colPivHouseholderQr().solve(rhs);
    if (!delta.allFinite()) break;
    double scale = 1.0;
    bool improved = false;
    for (int bt = 0; bt < 25; ++bt) {
      std::vector<double> vn = v;
      for (int i = 0; i < nv; ++i) vn[i] += scale * delta(i);
      residual(vn, r);
      double rn = norm2(r);
      if (std::isfinite(rn) && rn < best) {
        v = std::move(vn);
        best = rn;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;
  }

  // the penalty iterate sits a little outside the feasible set, so the exact
  // point may cost slightly more; feasibility decides, not the objective
  std::vector<double> xn(v.begin(), v.begin() + n);
  if (all_finite(xn) && feas_measure(c, xn) <= feas_measure(c, x)) x = std::move(xn);
}

// projection-only polish used by the feasibility probe
void feas_polish(const SphereCtx& c, std::vector<double>& x) {
  int n = static_cast<int>(x.size());
  for (int it = 0; it < 30; ++it) {
    std::vector<int> act;
    for (int j = 0; j < static_cast<int>(c.h.size()); ++j) {
      if (c.h[j].eval(x) < 1e-8 * (1.0 + c.t)) act.push_back(j);
    }
    int rows = static_cast<int>(c.g.size()) + static_cast<int>(act.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(rows, n);
    Eigen::VectorXd r(rows);
    std::vector<double> col(n, 0.0);
    int ridx = 0;
    for (const auto& q : c.g) {
      std::fill(col.begin(), col.end(), 0.0);
      q.add_gradient(x, 1.0, col);
      for (int i = 0; i < n; ++i) J(ridx, i) = col[i];
      r(ridx++) = -q.eval(x);
    }
    for (int j : act) {
      std::fill(col.begin(), col.end(), 0.0);
      c.h[j].add_gradient(x, 1.0, col);
      for (int i = 0; i < n; ++i) J(ridx, i) = col[i];
      r(ridx++) = -c.h[j].eval(x);
    }
    double sph = -c.t * c.t;
    for (int i : c.orig) {
      J(ridx, i) = 2.0 * x[i];
      sph += x[i] * x[i];
    }
    r(ridx) = -sph;
    Eigen::VectorXd delta = J.colPivHouseholderQr().solve(r);
    if (!delta.allFinite()) return;
    double dn = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] += delta(i);
      dn = std::max(dn, std::abs(delta(i)));
    }
    if (dn < 1e-13 * (1.0 + c.t)) break;
  }
}

std::vector<double> random_start(const SphereCtx& c, Rng& rng) {
  std::vector<double> x(c.p->nvars(), 0.0);
  for (int i : c.orig) x[i] = rng.normal();
  retract(c, x);
  for (const auto& [var, ex] : c.lifts) x[var] = std::abs(ex.eval(x));
  return x;
}

void reseat_lifts(const SphereCtx& c, std::vector<double>& x) {
  for (const auto& [var, ex] : c.lifts) x[var] = std::abs(ex.eval(x));
}

struct StartOutcome {
  std::vector<double> x;
  double value = 0.0;
  bool feasible = false;
  bool finite = true;
};

StartOutcome run_start(const SphereCtx& c, std::vector<double> x, const OracleConfig& cfg) {
  int per_round = std::max(10, cfg.max_iters / std::max(1, cfg.penalty_rounds));
  double rho = cfg.penalty_init;
  for (int round = 0; round < cfg.penalty_rounds; ++round) {
    descend(c, x, rho, true, per_round, cfg.tol_grad);
    rho *= cfg.penalty_ratio;
  }
  kkt_polish(c, x);
  StartOutcome out;
  out.finite = all_finite(x);
  if (!out.finite) return out;
  out.feasible = is_feasible(c, x, cfg.tol_feas);
  out.value = c.f.eval(x);
  out.x = std::move(x);
  return out;
}

SphereSample reduce_outcomes(const SphereCtx& c, const std::vector<StartOutcome>& outs) {
  SphereSample s;
  s.t = c.t;
  const StartOutcome* best = nullptr;
  for (const auto& o : outs) {
    if (!o.feasible) continue;
    if (best == nullptr || o.value < best->value ||
        (o.value == best->value && lex_less(o.x, best->x))) {
      best = &o;
    }
  }
  if (best == nullptr) return s;
  s.feasible = true;
  s.psi = best->value;
  s.minimizer = best->x;
  s.feas_residual = feas_measure(c, s.minimizer);
  for (const auto& o : outs) {
    if (o.feasible && std::abs(o.value - s.psi) <= 1e-6 * (1.0 + std::abs(s.psi))) ++s.agreement;
  }
  return s;
}

SphereSample sample_psi_seeded(const Problem& p, double t, const OracleConfig& cfg,
                               const std::vector<double>* warm) {
  if (!(t > 0.0)) throw Error("sphere radius must be positive");
  SphereCtx c = make_ctx(p, t);
  if (p.trivially_infeasible) {
    SphereSample s;
    s.t = t;
    return s;
  }
  Rng rng(mix_seed(cfg.seed, t));
  std::vector<StartOutcome> outs;
  for (int k = 0; k < std::max(1, cfg.starts); ++k) {
    std::vector<double> x;
    if (k == 0 && warm != nullptr && warm->size() == static_cast<size_t>(p.nvars())) {
      x = *warm;
      retract(c, x);
      reseat_lifts(c, x);
    } else {
      x = random_start(c, rng);
    }
    outs.push_back(run_start(c, std::move(x), cfg));
  }
  return reduce_outcomes(c, outs);
}

}  // namespace

SphereSample sample_psi(const Problem& p, double t, const OracleConfig& cfg) {
  return sample_psi_seeded(p, t, cfg, nullptr);
}

std::vector<SphereSample> psi_grid(const Problem& p, const std::vector<double>& radii,
                                   const OracleConfig& cfg) {
  std::vector<SphereSample> grid;
  const std::vector<double>* warm = nullptr;
  for (double t : radii) {
    grid.push_back(sample_psi_seeded(p, t, cfg, warm));
    warm = grid.back().feasible ? &grid.back().minimizer : nullptr;
  }
  return grid;
}

DomainCheck check_unbounded_domain(const Problem& p, const std::vector<double>& radii,
                                   const OracleConfig& cfg) {
  DomainCheck out;
  for (double t : radii) {
    SphereCtx c = make_ctx(p, t);
    if (p.trivially_infeasible) {
      out.failed_radius = t;
      return out;
    }
    Rng rng(mix_seed(cfg.seed ^ 0x5eedf00dULL, t));
    const std::vector<double>* best = nullptr;
    std::vector<std::vector<double>> feas;
    for (int k = 0; k < std::max(1, cfg.starts); ++k) {
      std::vector<double> x = random_start(c, rng);
      descend(c, x, 1.0, false, cfg.max_iters, cfg.tol_grad);
      feas_polish(c, x);
      retract(c, x);
      if (all_finite(x) && is_feasible(c, x, cfg.tol_feas)) feas.push_back(std::move(x));
    }
    for (const auto& x : feas) {
      if (best == nullptr || lex_less(x, *best)) best = &x;
    }
    if (best == nullptr) {
      out.failed_radius = t;
      return out;
    }
    out.witnesses.push_back(*best);
  }
  out.unbounded = true;
  return out;
}

std::vector<NumericSolution> solve_system_numeric(const PolySystem& sys, const OracleConfig& cfg,
                                                  int fixed_var, double fixed_value,
                                                  const std::vector<double>& scales,
                                                  const std::vector<std::vector<double>>& extra_starts) {
  int n = sys.nvars();
  int rows = static_cast<int>(sys.polys.size());
  std::vector<int> unknowns;
  for (int v = 0; v < n; ++v) {
    if (v != fixed_var) unknowns.push_back(v);
  }
  int nu = static_cast<int>(unknowns.size());

  std::vector<CompiledPoly> rowp;
  std::vector<std::vector<CompiledPoly>> jac(rows);
  for (int r = 0; r < rows; ++r) {
    rowp.emplace_back(sys.polys[r]);
    for (int cidx = 0; cidx < nu; ++cidx) {
      jac[r].emplace_back(sys.polys[r].derivative(unknowns[cidx]));
    }
  }

  // Column scaling comes from the caller's magnitude hints. Row weights are
  // dynamic: each iteration equilibrates rows by their mass at the current
  // iterate, so rows operating far below their hinted scale (needle
  // solutions) keep full strength instead of dropping out of the Jacobian.
  std::vector<double> sc(n, 1.0);
  for (int v = 0; v < n; ++v) {
    if (v < static_cast<int>(scales.size()) && scales[v] > 0.0) sc[v] = scales[v];
  }
  if (fixed_var >= 0 && std::abs(fixed_value) > 1.0) sc[fixed_var] = std::abs(fixed_value);

  std::vector<double> rw(rows, 1.0);
  auto refresh_weights = [&](const std::vector<double>& x) {
    for (int i = 0; i < rows; ++i) rw[i] = 1.0 / (1.0 + rowp[i].row_scale(x));
  };
  auto eval_res = [&](const std::vector<double>& x, Eigen::VectorXd& r) {
    for (int i = 0; i < rows; ++i) r(i) = rowp[i].eval(x) * rw[i];
  };

  Rng rng(mix_seed(cfg.seed ^ 0xabcdef12ULL, fixed_value + n));
  std::vector<NumericSolution> found;
  Eigen::VectorXd r(rows), rn(rows);

  auto attempt = [&](std::vector<double> x) {
    if (fixed_var >= 0) x[fixed_var] = fixed_value;

    refresh_weights(x);
    eval_res(x, r);
    double cur = r.norm();
    bool dead = !std::isfinite(cur);
    for (int it = 0; it < 60 && !dead; ++it) {
      Eigen::MatrixXd J(rows, nu);
      for (int i = 0; i < rows; ++i) {
        for (int cidx = 0; cidx < nu; ++cidx) {
          J(i, cidx) = jac[i][cidx].eval(x) * rw[i] * sc[unknowns[cidx]];
        }
      }
      Eigen::VectorXd delta = J.colPivHouseholderQr().solve(-r);
      if (!delta.allFinite()) break;
      double scale = 1.0;
      bool improved = false;
      for (int bt = 0; bt < 30; ++bt) {
        std::vector<double> xn = x;
        for (int cidx = 0; cidx < nu; ++cidx) {
          xn[unknowns[cidx]] += scale * delta(cidx) * sc[unknowns[cidx]];
        }
        eval_res(xn, rn);
        double nn = rn.norm();
        if (std::isfinite(nn) && nn < cur) {
          x = std::move(xn);
          r = rn;
          cur = nn;
          improved = true;
          break;
        }
        scale *= 0.5;
      }
      if (!improved) break;
      // the merit freezes its weights inside the line search; refresh them at
      // the accepted point so the next step sees the local row masses
      refresh_weights(x);
      eval_res(x, r);
      cur = r.norm();
      if (cur < 1e-15) break;
    }
    if (dead || !all_finite(x)) return;

    NumericSolution sol;
    sol.x = x;
    sol.residual = 0.0;
    sol.scaled_residual = 0.0;
    for (int i = 0; i < rows; ++i) {
      double ri = std::abs(rowp[i].eval(x));
      sol.residual = std::max(sol.residual, ri);
      sol.scaled_residual = std::max(sol.scaled_residual, ri / (1.0 + rowp[i].row_scale(x)));
    }
    if (sol.residual <= 1e-8 || sol.scaled_residual <= 1e-9) found.push_back(std::move(sol));
  };

  for (const auto& s : extra_starts) {
    if (static_cast<int>(s.size()) == n) attempt(s);
  }

  // Needle solutions hug the coordinate axes, and gaussian draws essentially
  // never land near them; seed each wide axis explicitly. The off-axis
  // coordinates sit at +-1, not 0: exact zeros can make bilinear rows
  // gradient-free and strand the Newton step.
  attempt(std::vector<double>(n, 0.0));
  for (int v = 0; v < n; ++v) {
    if (v == fixed_var || sc[v] <= 1.0) continue;
    for (double sa : {1.0, -1.0}) {
      for (double so : {1.0, -1.0}) {
        std::vector<double> xa(n, so);
        xa[v] = sa * sc[v];
        attempt(xa);
      }
    }
  }

  std::vector<double> base(n, 0.0);
  for (int k = 0; k < std::max(1, cfg.starts); ++k) {
    // Odd starts mirror the previous draw; sign-symmetric systems keep both
    // of their basins covered even when the random draws cluster.
    if (k % 2 == 0) {
      for (int v = 0; v < n; ++v) {
        double s = v < static_cast<int>(scales.size()) && scales[v] > 0.0 ? scales[v] : 1.0;
        base[v] = s * rng.normal();
      }
    } else {
      for (double& b : base) b = -b;
    }
    attempt(base);
  }

  std::sort(found.begin(), found.end(),
            [](const NumericSolution& a, const NumericSolution& b) { return lex_less(a.x, b.x); });
  std::vector<NumericSolution> dedup;
  for (auto& s : found) {
    bool fresh = true;
    for (const auto& kept : dedup) {
      double d = 0.0, mag = 1.0;
      for (int v = 0; v < n; ++v) {
        d = std::max(d, std::abs(s.x[v] - kept.x[v]));
        mag = std::max(mag, std::abs(kept.x[v]));
      }
      if (d <= 1e-6 * mag) {
        fresh = false;
        break;
      }
    }
    if (fresh) dedup.push_back(std::move(s));
  }
  return dedup;
}

double licq_min_singular(const Problem& p, const std::vector<double>& x, double active_tol) {
  std::vector<std::vector<double>> rows;
  std::vector<double> col(p.nvars(), 0.0);
  for (const auto& q : p.equalities) {
    std::fill(col.begin(), col.end(), 0.0);
    CompiledPoly(q).add_gradient(x, 1.0, col);
    rows.push_back(col);
  }
  for (const auto& q : p.inequalities) {
    CompiledPoly cq(q);
    if (std::abs(cq.eval(x)) <= active_tol) {
      std::fill(col.begin(), col.end(), 0.0);
      cq.add_gradient(x, 1.0, col);
      rows.push_back(col);
    }
  }
  if (rows.empty()) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd M(rows.size(), p.nvars());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < p.nvars(); ++j) M(i, j) = rows[i][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues().minCoeff();
}

LeadingFit fit_leading_term(const std::vector<SphereSample>& samples) {
  LeadingFit fit;
  std::vector<std::pair<double, double>> pts;  // (log t, log |psi|)
  int sign = 0;
  for (const auto& s : samples) {
    if (!s.feasible || std::abs(s.psi) <= 1e-12 || s.t <= 0.0) continue;
    int sg = s.psi > 0.0 ? 1 : -1;
    if (sign == 0) sign = sg;
    if (sg != sign) return fit;  // mixed signs: no single leading term
    pts.emplace_back(std::log(s.t), std::log(std::abs(s.psi)));
  }
  if (pts.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [lx, ly] : pts) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double nn = static_cast<double>(pts.size());
  double den = nn * sxx - sx * sx;
  if (std::abs(den) < 1e-12) return fit;
  fit.alpha = (nn * sxy - sx * sy) / den;
  fit.a = sign * std::exp((sy - fit.alpha * sx) / nn);
  fit.ok = true;
  return fit;
}

double polish_curve_root(const MultiPoly& curve, double u, double w0, int iters,
                         double* scaled_residual) {
  CompiledPoly cp(curve);
  CompiledPoly dp(curve.derivative(1));
  std::vector<double> x = {u, w0};
  for (int it = 0; it < iters; ++it) {
    double v = cp.eval(x);
    double d = dp.eval(x);
    if (!std::isfinite(v) || !std::isfinite(d) || std::abs(d) < 1e-300) break;
    double step = v / d;
    x[1] -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(x[1]))) break;
  }
  if (scaled_residual != nullptr) {
    *scaled_residual = std::abs(cp.eval(x)) / (1.0 + cp.row_scale(x));
  }
  return x[1];
}

}  // namespace tangentinf
