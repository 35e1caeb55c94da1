#include "tangentinf/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "tangentinf/errors.hpp"

namespace tangentinf {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& k : r.c_) k = -k;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& k) const {
  if (k.is_zero()) return UniPoly();
  UniPoly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error("univariate division by zero");
  UniPoly r = a;
  std::vector<Rational> q(
      a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
      Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.leading() / b.leading();
    q[static_cast<size_t>(k)] = f;
    // r -= f * x^k * b
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::primitive_normalized() const {
  if (c_.empty()) return *this;
  Rational g(0);
  for (const auto& k : c_) g = rational_gcd(g, k);
  if (c_.back().sign() < 0) g = -g;
  UniPoly r = *this;
  for (auto& k : r.c_) k /= g;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& k = c_[static_cast<size_t>(i)];
    if (k.is_zero()) continue;
    bool neg = k.sign() < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = neg ? -k : k;
    if (i == 0) {
      os << a.to_string();
    } else {
      if (!a.is_one()) os << a.to_string() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly p = a.primitive_normalized();
  UniPoly q = b.primitive_normalized();
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  while (!q.is_zero()) {
    UniPoly r = UniPoly::divrem(p, q).second;
    p = q;
    // Normalizing every round keeps the integers small.
    q = r.primitive_normalized();
  }
  return p.primitive_normalized();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 1) return p.primitive_normalized();
  UniPoly g = unipoly_gcd(p, p.derivative());
  if (g.is_constant()) return p.primitive_normalized();
  return UniPoly::divrem(p, g).first.primitive_normalized();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  // Yun's algorithm over Q.
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  UniPoly a = p.primitive_normalized();
  UniPoly g = unipoly_gcd(a, a.derivative());
  if (g.is_constant()) {
    out.push_back(a);
    return out;
  }
  UniPoly w = UniPoly::divrem(a, g).first;
  UniPoly y = UniPoly::divrem(a.derivative(), g).first;
  UniPoly z = y - w.derivative();
  while (!z.is_zero()) {
    UniPoly f = unipoly_gcd(w, z);
    out.push_back(f);
    w = UniPoly::divrem(w, f).first;
    y = UniPoly::divrem(z, f).first;
    z = y - w.derivative();
  }
  out.push_back(w);
  return out;
}

UniPoly to_unipoly(const MultiPoly& p, int var) {
  std::vector<Rational> cs(static_cast<size_t>(std::max(0, p.degree_in(var) + 1)),
                           Rational(0));
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var && m.e[static_cast<size_t>(i)])
        throw Error("polynomial is not univariate in the requested variable");
    cs[m.e[static_cast<size_t>(var)]] += c;
  }
  return UniPoly(std::move(cs));
}

MultiPoly to_multipoly(const UniPoly& p, int nvars, int var) {
  MultiPoly r(nvars);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    Monomial m(nvars);
    m.e[static_cast<size_t>(var)] = static_cast<std::uint32_t>(i);
    r.add_term(m, p.coeff(i));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sturm machinery and root isolation.

std::vector<UniPoly> sturm_chain(const UniPoly& s) {
  std::vector<UniPoly> chain;
  chain.push_back(s.primitive_normalized());
  if (s.degree() < 1) return chain;
  chain.push_back(s.derivative().primitive_normalized());
  while (chain.back().degree() > 0) {
    UniPoly r = UniPoly::divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Scale by a positive rational only: Sturm signs must survive.
    Rational g(0);
    for (const auto& k : r.coeffs()) g = rational_gcd(g, k);
    chain.push_back((-r).scaled(g.reciprocal()));
  }
  return chain;
}

namespace {

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  int last = 0, var = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Strict Cauchy bound: every real root lies in (-B, B).
Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = max(m, abs(p.coeff(i)));
  return Rational(1) + m / abs(p.leading());
}

constexpr long kDivisorBound = 1000000;
constexpr size_t kMaxCandidates = 4096;

std::vector<mpz_class> small_divisors(const mpz_class& n) {
  // Positive divisors of |n|; empty when |n| exceeds the enumeration bound.
  std::vector<mpz_class> out;
  mpz_class a = ::abs(n);
  if (a == 0 || a > kDivisorBound) return out;
  unsigned long v = a.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// Exhaustive only when the divisor enumeration is small; a handful of tiny
// candidates is always tried so the common cases (0, +-1, +-2, +-1/2) never
// slip through.
std::pair<std::vector<Rational>, UniPoly> strip_rational_roots(UniPoly s) {
  std::vector<Rational> roots;
  // x = 0.
  while (!s.is_zero() && s.coeff(0).is_zero() && s.degree() >= 1) {
    roots.emplace_back(0);
    std::vector<Rational> shifted(s.coeffs().begin() + 1, s.coeffs().end());
    s = UniPoly(std::move(shifted));
  }
  bool progress = true;
  while (progress && s.degree() >= 1) {
    progress = false;
    std::vector<Rational> candidates;
    auto nums = small_divisors(s.coeff(0).numerator());
    auto dens = small_divisors(s.leading().numerator());
    if (!nums.empty() && !dens.empty() &&
        nums.size() * dens.size() * 2 <= kMaxCandidates) {
      for (const auto& p : nums)
        for (const auto& q : dens) {
          candidates.emplace_back(p, q);
          candidates.emplace_back(mpz_class(-p), q);
        }
    } else {
      for (long v : {1L, -1L, 2L, -2L}) candidates.emplace_back(v);
      candidates.emplace_back(1, 2);
      candidates.emplace_back(-1, 2);
    }
    for (const auto& cand : candidates) {
      if (s.degree() < 1) break;
      if (!s.eval(cand).is_zero()) continue;
      roots.push_back(cand);
      UniPoly lin({-cand, Rational(1)});
      s = UniPoly::divrem(s, lin).first.primitive_normalized();
      progress = true;
    }
  }
  return {std::move(roots), std::move(s)};
}

namespace {

struct Isolated {
  Rational lo, hi;
};

// Isolating intervals for every real root of squarefree s; endpoints are
// never roots. Exact rational hits discovered mid-bisection are returned
// separately so the caller can deflate and restart.
void isolate(const UniPoly& s, const std::vector<UniPoly>& chain, Rational lo,
             Rational hi, int lo_var, int hi_var, std::vector<Isolated>& out,
             std::vector<Rational>& exact_hits) {
  int count = lo_var - hi_var;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  if (s.eval(mid).is_zero()) {
    exact_hits.push_back(mid);
    return;  // caller deflates and restarts from scratch
  }
  int mid_var = sign_variations_at(chain, mid);
  isolate(s, chain, lo, mid, lo_var, mid_var, out, exact_hits);
  isolate(s, chain, mid, hi, mid_var, hi_var, out, exact_hits);
}

// Bisect toward the root of `s` in (rr.lo, rr.hi) down to `width`. The strict
// sign change is an invariant; a midpoint that evaluates to zero upgrades the
// root to exact rational.
void refine_root(const UniPoly& s, RealRoot& rr, const Rational& width) {
  if (rr.is_rational) return;
  int slo = s.eval(rr.lo).sign();
  while (rr.hi - rr.lo > width) {
    Rational mid = (rr.lo + rr.hi) / Rational(2);
    int sm = s.eval(mid).sign();
    if (sm == 0) {
      rr.is_rational = true;
      rr.value = rr.lo = rr.hi = mid;
      return;
    }
    if (sm == slo)
      rr.lo = mid;
    else
      rr.hi = mid;
  }
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& width) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  // Every root keeps the squarefree factor it came from so later refinement
  // has a valid sign-change witness even when other factors' roots are near.
  std::vector<std::pair<RealRoot, UniPoly>> work;
  auto factors = squarefree_decomposition(p);
  for (size_t k = 0; k < factors.size(); ++k) {
    int mult = static_cast<int>(k) + 1;
    UniPoly s = factors[k].primitive_normalized();
    if (s.degree() < 1) continue;
    auto [rats, rest] = strip_rational_roots(std::move(s));
    for (const auto& r : rats) {
      RealRoot rr;
      rr.is_rational = true;
      rr.value = rr.lo = rr.hi = r;
      rr.multiplicity = mult;
      work.emplace_back(std::move(rr), UniPoly());
    }
    s = std::move(rest);
    // Isolate; restart whenever a bisection midpoint turns out to be an exact
    // root the bounded divisor pass missed.
    while (s.degree() >= 1) {
      auto chain = sturm_chain(s);
      Rational b = cauchy_bound(s);
      std::vector<Isolated> iso;
      std::vector<Rational> hits;
      isolate(s, chain, -b, b, sign_variations_at(chain, -b),
              sign_variations_at(chain, b), iso, hits);
      if (!hits.empty()) {
        for (const auto& h : hits) {
          RealRoot rr;
          rr.is_rational = true;
          rr.value = rr.lo = rr.hi = h;
          rr.multiplicity = mult;
          work.emplace_back(std::move(rr), UniPoly());
          UniPoly lin({-h, Rational(1)});
          s = UniPoly::divrem(s, lin).first.primitive_normalized();
        }
        continue;
      }
      for (auto& iv : iso) {
        RealRoot rr;
        rr.lo = iv.lo;
        rr.hi = iv.hi;
        rr.multiplicity = mult;
        work.emplace_back(std::move(rr), s);
      }
      break;
    }
  }
  for (auto& [rr, fac] : work) refine_root(fac, rr, width);
  // Pairwise disjoint intervals: all roots here are distinct reals (Yun
  // factors are coprime, rational roots were deflated), so halving widths
  // separates them. The cap only guards against implementation bugs.
  for (int guard = 0; guard < 4096; ++guard) {
    bool overlap = false;
    for (size_t i = 0; i < work.size() && !overlap; ++i) {
      for (size_t j = i + 1; j < work.size() && !overlap; ++j) {
        RealRoot &a = work[i].first, &b = work[j].first;
        if (a.hi < b.lo || b.hi < a.lo) continue;
        overlap = true;
        if (!a.is_rational) refine_root(work[i].second, a, (a.hi - a.lo) / Rational(4));
        if (!b.is_rational) refine_root(work[j].second, b, (b.hi - b.lo) / Rational(4));
      }
    }
    if (!overlap) break;
  }
  out.reserve(work.size());
  for (auto& [rr, fac] : work) out.push_back(std::move(rr));
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    return a.approx_mid() < b.approx_mid();
  });
  return out;
}

}  // namespace tangentinf
