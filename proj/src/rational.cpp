#include "tangentinf/rational.hpp"

#include <ostream>

#include "tangentinf/errors.hpp"

namespace tangentinf {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw Error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  // Shape: sign? digits ('/' digits)?  -- anything else is a parse error.
  size_t i = 0;
  auto fail = [&]() -> Rational {
    throw ParseError("malformed rational literal '" + std::string(s) + "'", 1,
                     static_cast<int>(i) + 1);
  };
  if (s.empty()) return fail();
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  size_t num_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_start) return fail();
  mpz_class num(std::string(s.substr(num_start, i - num_start)), 10);
  if (neg) num = -num;
  if (i == s.size()) return Rational(num);
  if (s[i] != '/') return fail();
  ++i;
  size_t den_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == den_start || i != s.size()) return fail();
  mpz_class den(std::string(s.substr(den_start)), 10);
  if (sgn(den) == 0) throw ParseError("zero denominator in rational literal", 1, 1);
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

mpz_class Rational::floor_z() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil_z() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw Error("zero to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), ue);
  return invert ? Rational(den, num) : Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.q_;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return abs(b);
  if (b.is_zero()) return abs(a);
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return Rational(num, den);
}

}  // namespace tangentinf
