#include "tangentinf/algebraic.hpp"

#include <cmath>
#include <limits>

#include "tangentinf/errors.hpp"

namespace tangentinf {

AlgebraicNumber AlgebraicNumber::from_root(const UniPoly& defining, Rational lo,
                                           Rational hi) {
  if (defining.degree() < 1) throw Error("defining polynomial must be nonconstant");
  if (!(lo < hi)) throw Error("empty isolating interval");
  UniPoly s = squarefree_part(defining);
  if (s.degree() == 1) return AlgebraicNumber(-s.coeff(0) / s.coeff(1));
  // An endpoint or midpoint that happens to be the root collapses the number
  // to exact form right away.
  if (s.eval(lo).is_zero()) return AlgebraicNumber(lo);
  if (s.eval(hi).is_zero()) return AlgebraicNumber(hi);
  Rational mid = (lo + hi) / Rational(2);
  if (s.eval(mid).is_zero()) return AlgebraicNumber(mid);
  // Deflate detectable rational roots. One inside the interval is the number
  // itself; zero in particular is always caught, which keeps sign() total.
  auto [rats, rest] = strip_rational_roots(std::move(s));
  for (const auto& r : rats)
    if (lo < r && r < hi) return AlgebraicNumber(r);
  if (rest.degree() < 1)
    throw Error("interval contains no root of the defining polynomial");
  if (rest.degree() == 1) {
    Rational r = -rest.coeff(0) / rest.coeff(1);
    if (lo < r && r < hi) return AlgebraicNumber(r);
    throw Error("interval contains no root of the defining polynomial");
  }
  // Stripping roots outside (lo, hi) scales both endpoint values by factors
  // of the same sign, so a strict sign change on s survives into rest.
  if (rest.eval(lo).sign() * rest.eval(hi).sign() > 0) {
    auto chain = sturm_chain(rest);
    if (sturm_count(chain, lo, hi) != 1)
      throw Error("interval does not isolate a single root");
    throw Error("isolating interval lacks a sign change");
  }
  AlgebraicNumber a;
  a.rational_ = false;
  a.value_ = Rational(0);
  a.poly_ = rest.primitive_normalized();
  a.lo_ = std::move(lo);
  a.hi_ = std::move(hi);
  return a;
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!rational_) throw Error("not an exact rational");
  return value_;
}

const UniPoly& AlgebraicNumber::defining_poly() const {
  if (rational_) throw Error("rational value has no stored defining polynomial");
  return poly_;
}

int AlgebraicNumber::sign() const {
  if (rational_) return value_.sign();
  if (lo_.sign() >= 0) return 1;   // root > lo >= 0
  if (hi_.sign() <= 0) return -1;  // root < hi <= 0
  // Interval straddles zero. from_root stripped any zero root, so the root
  // is nonzero and bisection eventually commits to one side.
  AlgebraicNumber tmp = *this;
  while (tmp.lo_.sign() < 0 && tmp.hi_.sign() > 0) {
    tmp.refine_once();
    if (tmp.rational_) return tmp.value_.sign();
  }
  return tmp.lo_.sign() >= 0 ? 1 : -1;
}

void AlgebraicNumber::refine_once() {
  if (rational_) return;
  Rational mid = (lo_ + hi_) / Rational(2);
  int sm = poly_.eval(mid).sign();
  if (sm == 0) {
    rational_ = true;
    value_ = mid;
    lo_ = hi_ = mid;
    return;
  }
  if (sm == poly_.eval(lo_).sign())
    lo_ = mid;
  else
    hi_ = mid;
}

void AlgebraicNumber::refine_below(const Rational& width) {
  while (!rational_ && hi_ - lo_ > width) refine_once();
}

double AlgebraicNumber::to_double() const {
  if (rational_) return value_.to_double();
  AlgebraicNumber tmp = *this;
  // 2^-64 of the current scale is far below double precision.
  Rational scale = max(Rational(1), max(abs(tmp.lo_), abs(tmp.hi_)));
  tmp.refine_below(scale / Rational(mpz_class(1) << 64, mpz_class(1)));
  return ((tmp.lo_ + tmp.hi_) / Rational(2)).to_double();
}

std::string AlgebraicNumber::to_string() const {
  if (rational_) return value_.to_string();
  return "root of " + poly_.to_string("a") + " in (" + lo_.to_string() + ", " +
         hi_.to_string() + ")";
}

AlgebraicNumber AlgebraicNumber::negated() const {
  if (rational_) return AlgebraicNumber(-value_);
  std::vector<Rational> cs = poly_.coeffs();
  for (size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
  AlgebraicNumber r;
  r.rational_ = false;
  r.poly_ = UniPoly(std::move(cs)).primitive_normalized();
  r.lo_ = -hi_;
  r.hi_ = -lo_;
  return r;
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b,
                             int max_bisect, bool* resolved) {
  if (resolved) *resolved = true;
  if (a.rational_ && b.rational_)
    return a.value_ < b.value_ ? -1 : (a.value_ == b.value_ ? 0 : 1);

  AlgebraicNumber x = a, y = b;
  if (x.rational_) std::swap(x, y);  // x is algebraic now
  if (y.rational_) {
    const Rational& r = y.value_;
    if (x.lo_ < r && r < x.hi_ && x.poly_.eval(r).is_zero()) return 0;
    for (int i = 0; i < max_bisect && x.lo_ < r && r < x.hi_; ++i) x.refine_once();
    if (x.rational_) {
      int c = x.value_ < r ? -1 : (x.value_ == r ? 0 : 1);
      return a.rational_ ? -c : c;
    }
    if (x.hi_ <= r) return a.rational_ ? 1 : -1;
    if (r <= x.lo_) return a.rational_ ? -1 : 1;
    if (resolved) *resolved = false;
    Rational mx = (x.lo_ + x.hi_) / Rational(2);
    int c = mx < r ? -1 : (mx == r ? 0 : 1);
    return a.rational_ ? -c : c;
  }

  // Both algebraic: equality exactly when the gcd of the defining polynomials
  // vanishes inside the overlap and each number's root lies in the overlap.
  UniPoly g = unipoly_gcd(x.poly_, y.poly_);
  auto chain_x = sturm_chain(x.poly_);
  auto chain_y = sturm_chain(y.poly_);
  auto chain_g = g.degree() >= 1 ? sturm_chain(g) : std::vector<UniPoly>{};
  for (int i = 0; i <= max_bisect; ++i) {
    if (x.rational_ || y.rational_) return compare(x, y, max_bisect, resolved);
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    Rational lo = max(x.lo_, y.lo_);
    Rational hi = min(x.hi_, y.hi_);
    if (g.degree() >= 1 && lo < hi && !g.eval(lo).is_zero() && !g.eval(hi).is_zero()) {
      bool x_in = sturm_count(chain_x, lo, hi) == 1;
      bool y_in = sturm_count(chain_y, lo, hi) == 1;
      if (x_in && y_in && sturm_count(chain_g, lo, hi) >= 1) return 0;
    }
    x.refine_once();
    y.refine_once();
  }
  if (resolved) *resolved = false;
  Rational mx = (x.lo_ + x.hi_) / Rational(2);
  Rational my = (y.lo_ + y.hi_) / Rational(2);
  return mx < my ? -1 : (mx == my ? 0 : 1);
}

bool AlgebraicNumber::equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return compare(a, b) == 0;
}

double ExtValue::to_double() const {
  switch (kind) {
    case Kind::NegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::PosInf:
      return std::numeric_limits<double>::infinity();
    case Kind::Finite:
      return v.to_double();
  }
  return 0.0;
}

std::string ExtValue::to_string() const {
  switch (kind) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      return v.to_string();
  }
  return "";
}

int ExtValue::compare(const ExtValue& a, const ExtValue& b, bool* resolved) {
  if (resolved) *resolved = true;
  if (a.kind == b.kind && a.kind != Kind::Finite) return 0;
  if (a.kind == Kind::NegInf) return -1;
  if (b.kind == Kind::NegInf) return 1;
  if (a.kind == Kind::PosInf) return 1;
  if (b.kind == Kind::PosInf) return -1;
  return AlgebraicNumber::compare(a.v, b.v, 60, resolved);
}

}  // namespace tangentinf
