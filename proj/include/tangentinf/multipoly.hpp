#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangentinf/monomial.hpp"
#include "tangentinf/rational.hpp"

namespace tangentinf {

// Sparse multivariate polynomial over exact rationals. Terms are stored in a
// fixed canonical order (graded lex) regardless of which term order a caller
// later computes with; engines that need another order sort their own views.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, Rational c);
  static MultiPoly variable(int nvars, int k);
  static MultiPoly term(int nvars, Monomial m, Rational c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial

  // -1 is the degree sentinel for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  bool uses_var(int var) const;
  // True when every monomial only involves variables in [lo, hi).
  bool supported_in(int lo, int hi) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(int var) const;
  Rational eval_exact(const std::vector<Rational>& x) const;
  double eval_double(const std::vector<double>& x) const;

  // Leading term with respect to an arbitrary order (linear scan).
  std::pair<Monomial, Rational> leading_term(const TermOrder& ord) const;

  // gcd of coefficients as a positive rational; 0 for the zero polynomial.
  Rational content() const;
  // Divides by content and flips sign so the canonical leading coefficient is
  // positive. Integer coefficients, primitive. No-op on zero.
  MultiPoly primitive_normalized() const;

  // Rebuilds the polynomial over `new_nvars` variables sending old variable i
  // to var_map[i]; var_map entries must be distinct and in range.
  MultiPoly remap(int new_nvars, const std::vector<int>& var_map) const;

  // Substitutes `rep` for variable `var` (exact, exponents cached).
  MultiPoly substitute(int var, const MultiPoly& rep) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Expression parser over a fixed variable list:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := var | rational | '(' expr ')'
// No implicit multiplication; whitespace is insignificant. The optional sign
// before the first term of an expr is a small convenience superset of the
// file grammar so that printed polynomials round-trip.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

// Exact quotient p / d; throws when the division leaves a remainder.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

// Multivariate gcd via primitive PRS, returned primitive with positive
// canonical leading coefficient. gcd(0, q) = normalized q.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// p with repeated factors in `var` collapsed: p / gcd(p, dp/dvar), primitive.
MultiPoly squarefree_in(const MultiPoly& p, int var);

}  // namespace tangentinf
