#pragma once

#include <string>
#include <vector>

#include "tangentinf/problem.hpp"

namespace tangentinf {

// Polynomial system in an ambient ring laid out for elimination: the
// variables to eliminate come first, the ones to keep come last, so a block
// order with split = keep_from projects onto the kept variables.
struct PolySystem {
  std::vector<MultiPoly> polys;
  std::vector<std::string> names;
  int mult_from = 0;  // multipliers occupy [mult_from, keep_from)
  int keep_from = 0;

  int nvars() const { return static_cast<int>(names.size()); }
  std::string to_string() const;
};

// Variable layout shared by the builders below. Order:
//   x_0..x_{n-1}, lambda per equality, nu per active inequality,
//   [mu], [u], w
// with u present only in the tangency system and mu only when requested.
struct SystemLayout {
  int n = 0;
  int n_eq = 0;
  std::vector<int> active;
  bool with_mu = false;
  bool with_u = false;

  int x(int i) const { return i; }
  int lambda(int k) const { return n + k; }
  int nu(int j) const;  // j indexes into `active`
  int mu() const;
  int u() const;
  int w() const;
  int total() const;
};

// Stationarity rows share one convention: for each non-lifted x_i,
//   d f/d x_i + sum_k lambda_k d g_k/d x_i - sum_{j in J} nu_j d h_j/d x_i
//     (+ mu * x_i  when the sphere multiplier is present)
// and for lifted variables the same row without the mu term.

// Critical points of f on S with active set J: stationarity, g = 0, h_j = 0
// for j in J, and w = f. Eliminating everything but w yields the candidate
// critical values.
PolySystem build_critical_system(const Problem& p, const std::vector<int>& J,
                                 SystemLayout* layout = nullptr);

// Tangency points: critical points of f on S intersected with the sphere
// sum x_i^2 = u over the non-lifted variables, via the extra multiplier mu.
// Eliminating everything but (u, w) yields the plane curve swept by the
// values along the sphere radius.
PolySystem build_tangency_system(const Problem& p, const std::vector<int>& J,
                                 SystemLayout* layout = nullptr);

// All active sets in increasing bitmask order; throws ActiveSetCapError when
// the inequality count exceeds `cap`.
std::vector<std::vector<int>> enumerate_active_sets(int m, int cap = 10);

}  // namespace tangentinf
