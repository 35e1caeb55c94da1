#pragma once

#include <utility>
#include <vector>

#include "tangentinf/multipoly.hpp"
#include "tangentinf/rational.hpp"

namespace tangentinf {

// Dense univariate polynomial over exact rationals. Coefficient i belongs to
// x^i; the representation never carries a zero leading coefficient.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c);
  static UniPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& k) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  // Field division: a = q*b + r with deg r < deg b.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

  // Integer-primitive with positive leading coefficient. Zero stays zero.
  UniPoly primitive_normalized() const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition: returns f_1, f_2, ... with p ~ prod f_k^k, each f_k
// squarefree and pairwise coprime (constants possible for absent k).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Conversions between the sparse multivariate type and this one. to_unipoly
// requires p to be supported on `var` alone.
UniPoly to_unipoly(const MultiPoly& p, int var);
MultiPoly to_multipoly(const UniPoly& p, int nvars, int var);

// One real root of a squarefree polynomial. Rational roots carry the exact
// value; the rest carry an isolating interval with a strict sign change.
struct RealRoot {
  bool is_rational = false;
  Rational value;  // when is_rational
  Rational lo, hi;
  int multiplicity = 1;

  Rational approx_mid() const { return is_rational ? value : (lo + hi) / Rational(2); }
};

// All real roots of p (any multiplicity), sorted increasing, with pairwise
// disjoint isolating intervals refined to at most `width`. Rational roots are
// detected exactly when the divisor enumeration stays small; see the header
// note in real_roots' implementation for the bound.
std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& width);

// Exact rational roots of a squarefree polynomial (exhaustive only when the
// divisor enumeration of the outer coefficients is small; zero and a few tiny
// candidates are always tried), together with the deflated cofactor.
std::pair<std::vector<Rational>, UniPoly> strip_rational_roots(UniPoly s);

// Number of distinct real roots of squarefree s inside (a, b); endpoints must
// not be roots.
int sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);
std::vector<UniPoly> sturm_chain(const UniPoly& squarefree);

}  // namespace tangentinf
