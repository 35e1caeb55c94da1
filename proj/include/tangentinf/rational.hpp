#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tangentinf {

// Exact rational number. Thin wrapper over mpq_class that keeps the value
// canonical (reduced, positive denominator) no matter how it was built.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : q_(n) {}
  explicit Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class q);

  // Accepts "p" or "p/q" with an optional leading sign; throws ParseError.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  // Largest integer <= value / smallest integer >= value.
  mpz_class floor_z() const;
  mpz_class ceil_z() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational reciprocal() const;
  // e may be negative (value must be nonzero then).
  Rational pow(long e) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

// gcd on rationals: gcd(nums)/lcm(dens), positive. gcd(0,0) = 0. Used for
// content computations where coefficients are not integers.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace tangentinf
