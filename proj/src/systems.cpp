#include "tangentinf/systems.hpp"

#include "tangentinf/errors.hpp"

namespace tangentinf {

int SystemLayout::nu(int j) const { return n + n_eq + j; }

int SystemLayout::mu() const { return n + n_eq + static_cast<int>(active.size()); }

int SystemLayout::u() const {
  return n + n_eq + static_cast<int>(active.size()) + (with_mu ? 1 : 0);
}

int SystemLayout::w() const { return u() + (with_u ? 1 : 0); }

int SystemLayout::total() const { return w() + 1; }

std::string PolySystem::to_string() const {
  std::string out;
  for (const auto& q : polys) {
    out += q.to_string(names);
    out += " = 0\n";
  }
  return out;
}

namespace {

PolySystem build_system(const Problem& p, const std::vector<int>& J, bool with_mu,
                        bool with_u, SystemLayout* layout_out) {
  SystemLayout L;
  L.n = p.nvars();
  L.n_eq = static_cast<int>(p.equalities.size());
  L.active = J;
  L.with_mu = with_mu;
  L.with_u = with_u;
  int N = L.total();

  PolySystem sys;
  sys.mult_from = L.n;
  sys.keep_from = with_u ? L.u() : L.w();
  sys.names.resize(N);
  for (int i = 0; i < L.n; ++i) sys.names[L.x(i)] = p.vars[i];
  for (int k = 0; k < L.n_eq; ++k) sys.names[L.lambda(k)] = "lambda" + std::to_string(k);
  for (size_t j = 0; j < J.size(); ++j)
    sys.names[L.nu(static_cast<int>(j))] = "nu" + std::to_string(J[j]);
  if (with_mu) sys.names[L.mu()] = "mu";
  if (with_u) sys.names[L.u()] = "u";
  sys.names[L.w()] = "w";

  // Everything lives in the N-variable ring; problem polynomials keep their
  // variable indices because x occupies the leading block.
  auto widen = [&](const MultiPoly& q) {
    std::vector<int> id(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) id[i] = i;
    return q.remap(N, id);
  };

  for (int i = 0; i < L.n; ++i) {
    MultiPoly row = widen(p.objective.derivative(i));
    for (int k = 0; k < L.n_eq; ++k)
      row += MultiPoly::variable(N, L.lambda(k)) * widen(p.equalities[k].derivative(i));
    for (size_t j = 0; j < J.size(); ++j)
      row -= MultiPoly::variable(N, L.nu(static_cast<int>(j))) *
             widen(p.inequalities[J[j]].derivative(i));
    if (with_mu && !p.lifted[i])
      row += MultiPoly::variable(N, L.mu()) * MultiPoly::variable(N, L.x(i));
    if (!row.is_zero()) sys.polys.push_back(std::move(row));
  }
  for (const auto& g : p.equalities) sys.polys.push_back(widen(g));
  for (int j : J) sys.polys.push_back(widen(p.inequalities[j]));
  if (with_u) {
    MultiPoly sphere(N);
    for (int i : p.original_vars()) {
      MultiPoly xi = MultiPoly::variable(N, L.x(i));
      sphere += xi * xi;
    }
    sphere -= MultiPoly::variable(N, L.u());
    sys.polys.push_back(std::move(sphere));
  }
  sys.polys.push_back(MultiPoly::variable(N, L.w()) - widen(p.objective));

  if (layout_out) *layout_out = L;
  return sys;
}

}  // namespace

PolySystem build_critical_system(const Problem& p, const std::vector<int>& J,
                                 SystemLayout* layout) {
  return build_system(p, J, /*with_mu=*/false, /*with_u=*/false, layout);
}

PolySystem build_tangency_system(const Problem& p, const std::vector<int>& J,
                                 SystemLayout* layout) {
  return build_system(p, J, /*with_mu=*/true, /*with_u=*/true, layout);
}

std::vector<std::vector<int>> enumerate_active_sets(int m, int cap) {
  if (m > cap)
    throw ActiveSetCapError("problem has " + std::to_string(m) +
                            " inequalities; active set enumeration is capped at " +
                            std::to_string(cap));
  std::vector<std::vector<int>> out;
  out.reserve(size_t(1) << m);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> J;
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) J.push_back(j);
    out.push_back(std::move(J));
  }
  return out;
}

}  // namespace tangentinf
