#include "tangentinf/resultant.hpp"

#include "tangentinf/errors.hpp"

namespace tangentinf {

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var) {
  int d = p.degree_in(var);
  std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, 0)) + 1,
                             MultiPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    uint32_t e = rest.e[var];
    rest.e[var] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
  int dp = p.degree_in(var);
  int dq = q.degree_in(var);
  if (dp < 1 || dq < 1) throw Error("resultant needs positive degree in the variable");
  auto pc = coefficients_in(p, var);
  auto qc = coefficients_in(q, var);
  int n = dp + dq;
  MultiPoly zero(p.nvars());
  std::vector<std::vector<MultiPoly>> M(n, std::vector<MultiPoly>(n, zero));
  // dq rows of p's coefficients, then dp rows of q's, highest degree first.
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) M[r][r + dp - k] = pc[k];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) M[dq + r][r + dq - k] = qc[k];

  // Bareiss fraction-free elimination; every division is exact.
  MultiPoly prev = MultiPoly::constant(p.nvars(), Rational(1));
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!M[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return zero;
      std::swap(M[k], M[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  return sign < 0 ? M[n - 1][n - 1].scaled(Rational(-1)) : M[n - 1][n - 1];
}

}  // namespace tangentinf
