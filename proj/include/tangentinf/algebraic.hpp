#pragma once

#include <optional>
#include <string>

#include "tangentinf/rational.hpp"
#include "tangentinf/unipoly.hpp"

namespace tangentinf {

// Real algebraic number: either an exact rational, or a root of a squarefree
// integer polynomial pinned down by an isolating interval with a strict sign
// change. Rational roots are stripped at construction (within the divisor
// bound), so the defining polynomial is minimal whenever its degree is <= 3;
// higher degrees may in rare cases carry a reducible squarefree polynomial.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : rational_(true), value_(0) {}
  explicit AlgebraicNumber(Rational r) : rational_(true), value_(std::move(r)) {}
  static AlgebraicNumber from_rational(Rational r) { return AlgebraicNumber(std::move(r)); }
  // `defining` need not be squarefree; lo/hi must isolate exactly one real
  // root. Collapses to a rational when the interval pins a rational root.
  static AlgebraicNumber from_root(const UniPoly& defining, Rational lo, Rational hi);

  bool is_rational() const { return rational_; }
  const Rational& rational_value() const;
  const UniPoly& defining_poly() const;  // valid only when !is_rational()
  Rational lower() const { return rational_ ? value_ : lo_; }
  Rational upper() const { return rational_ ? value_ : hi_; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  AlgebraicNumber negated() const;

  void refine_once();
  void refine_below(const Rational& width);

  // Exact three-way comparison. Equality is decided through the gcd of the
  // defining polynomials; order by interval separation. `resolved` reports
  // whether the bisection cap sufficed (it essentially always does); on an
  // unresolved tie the midpoint order is returned.
  static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b,
                     int max_bisect = 60, bool* resolved = nullptr);
  static bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b);

  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) == 0;
  }

 private:
  bool rational_;
  Rational value_;
  UniPoly poly_;  // primitive integer, squarefree, positive leading coeff
  Rational lo_, hi_;
};

// Value on the extended real line; branch limits and optimal values live here.
struct ExtValue {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  AlgebraicNumber v;

  static ExtValue neg_inf() { return {Kind::NegInf, {}}; }
  static ExtValue pos_inf() { return {Kind::PosInf, {}}; }
  static ExtValue finite(AlgebraicNumber a) { return {Kind::Finite, std::move(a)}; }
  static ExtValue finite(Rational r) { return {Kind::Finite, AlgebraicNumber(std::move(r))}; }

  bool is_finite() const { return kind == Kind::Finite; }
  double to_double() const;
  std::string to_string() const;

  static int compare(const ExtValue& a, const ExtValue& b, bool* resolved = nullptr);
};

}  // namespace tangentinf
