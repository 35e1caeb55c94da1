#include "tangentinf/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "tangentinf/errors.hpp"
#include "tangentinf/unipoly.hpp"

namespace tangentinf {
namespace {

// Series-coefficient polynomial in the branch unknown y: c[j] maps rational
// s-exponents to coefficients of s^e * y^j. Exponents are kept rational
// directly, so no ramified substitution is ever needed.
using SCoeff = std::map<Rational, Rational>;
struct SPoly {
  std::vector<SCoeff> c;
};

void drop_zeros(SPoly& q) {
  for (auto& m : q.c) {
    for (auto it = m.begin(); it != m.end();) {
      it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }
  }
}

// P(u, w) rewritten in s = 1/u and cleared of denominators: u^i w^j becomes
// s^(D - i) w^j with D the u-degree.
SPoly from_curve(const MultiPoly& p) {
  long D = static_cast<long>(p.degree_in(0));
  long dw = static_cast<long>(p.degree_in(1));
  SPoly q;
  q.c.resize(dw + 1);
  for (const auto& [mono, coef] : p.terms()) {
    q.c[mono.e[1]][Rational(D - static_cast<long>(mono.e[0]))] += coef;
  }
  drop_zeros(q);
  return q;
}

struct HullPoint {
  int j;
  Rational e;
};

// Lower hull of the support points, vertices in increasing j with strictly
// increasing edge slopes (collinear interior points are collapsed).
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const HullPoint& a = hull[hull.size() - 2];
      const HullPoint& b = hull.back();
      // pop b unless it lies strictly below the chord a-p
      if ((b.e - a.e) * Rational(p.j - b.j) >= (p.e - b.e) * Rational(b.j - a.j)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

struct Ctx {
  int max_terms;
  std::vector<PuiseuxBranch> branches;
  long complex_count = 0;
};

// q(s, y) -> q(s, s^gamma * (c + y)) / s^nu, exact in every coefficient.
SPoly shift_edge(const SPoly& q, const Rational& gamma, const Rational& c, const Rational& nu) {
  SPoly out;
  out.c.resize(q.c.size());
  for (int j = 0; j < static_cast<int>(q.c.size()); ++j) {
    if (q.c[j].empty()) continue;
    Rational shift = gamma * Rational(j) - nu;
    Rational bin(1);  // binomial (j choose k), updated in place
    for (int k = 0; k <= j; ++k) {
      Rational scale = bin * c.pow(j - k);
      if (!scale.is_zero()) {
        for (const auto& [e, a] : q.c[j]) out.c[k][e + shift] += a * scale;
      }
      if (k < j) bin = bin * Rational(j - k) / Rational(k + 1);
    }
  }
  drop_zeros(out);
  return out;
}

void expand_rec(const SPoly& q, std::vector<PuiseuxTerm> prefix, const Rational& abs_base,
                Ctx& ctx) {
  int top_deg = static_cast<int>(q.c.size()) - 1;
  int jmin = 0;
  while (jmin <= top_deg && q.c[jmin].empty()) ++jmin;

  // y^jmin divides q: the series built so far is an exact root (jmin times,
  // though a squarefree curve only ever yields jmin <= 1 here).
  if (jmin > 0) {
    PuiseuxBranch b;
    b.terms = prefix;
    b.multiplicity = jmin;
    b.exact = true;
    b.separated = jmin == 1;
    ctx.branches.push_back(std::move(b));
  }

  std::vector<HullPoint> pts;
  for (int j = jmin; j <= top_deg; ++j) {
    if (!q.c[j].empty()) pts.push_back({j, q.c[j].begin()->first});
  }
  if (pts.size() < 2) return;
  std::vector<HullPoint> hull = lower_hull(pts);

  bool top = prefix.empty();
  for (size_t ei = 0; ei + 1 < hull.size(); ++ei) {
    const HullPoint& a = hull[ei];
    const HullPoint& b = hull[ei + 1];
    Rational slope = (b.e - a.e) / Rational(b.j - a.j);
    // descending edges give y -> 0 corrections; the leading level also takes
    // flat and ascending edges for bounded and growing branches
    if (!top && slope.sign() >= 0) continue;
    Rational gamma = -slope;
    Rational nu = a.e + gamma * Rational(a.j);

    // characteristic polynomial: support points sitting on this edge
    std::vector<Rational> cp(b.j - a.j + 1, Rational(0));
    for (int j = a.j; j <= b.j; ++j) {
      Rational e_line = a.e + slope * Rational(j - a.j);
      auto it = q.c[j].find(e_line);
      if (it != q.c[j].end()) cp[j - a.j] = it->second;
    }
    UniPoly phi{std::move(cp)};

    std::vector<RealRoot> roots = real_roots(phi, Rational(1, 1 << 20));
    long real_mult = 0;
    for (const auto& r : roots) real_mult += r.multiplicity;
    ctx.complex_count += (b.j - a.j) - real_mult;

    for (const auto& r : roots) {
      Rational abs_exp = abs_base + gamma;
      if (r.is_rational && static_cast<int>(prefix.size()) + 1 < ctx.max_terms) {
        SPoly q2 = shift_edge(q, gamma, r.value, nu);
        std::vector<PuiseuxTerm> p2 = prefix;
        p2.push_back({abs_exp, AlgebraicNumber(r.value)});
        expand_rec(q2, std::move(p2), abs_exp, ctx);
      } else {
        // irrational coefficients stop the exact recursion; rational ones
        // land here only at the term cap
        PuiseuxBranch br;
        br.terms = prefix;
        br.terms.push_back({abs_exp, r.is_rational
                                         ? AlgebraicNumber(r.value)
                                         : AlgebraicNumber::from_root(phi, r.lo, r.hi)});
        br.multiplicity = r.multiplicity;
        br.exact = false;
        br.separated = r.multiplicity == 1;
        ctx.branches.push_back(std::move(br));
      }
    }
  }
}

}  // namespace

double PuiseuxBranch::approx_at_radius(double t) const {
  double acc = 0.0;
  for (const auto& term : terms) {
    acc += term.coeff.to_double() * std::pow(t, -2.0 * term.s_exp.to_double());
  }
  return acc;
}

std::string PuiseuxBranch::describe() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) os << " + ";
    os << terms[i].coeff.to_string();
    Rational et = terms[i].s_exp * Rational(-2);
    if (!et.is_zero()) os << "*t^(" << et.to_string() << ")";
  }
  if (!exact) os << " + ...";
  return os.str();
}

long PuiseuxResult::total_multiplicity() const {
  long n = complex_count;
  for (const auto& b : branches) n += b.multiplicity;
  return n;
}

PuiseuxResult expand_at_infinity(const MultiPoly& curve, int max_terms) {
  if (curve.nvars() != 2) throw Error("curve must live in the two variables u and w");
  if (curve.degree_in(1) < 1) throw Error("curve has no dependence on the value variable");
  if (max_terms < 1) throw Error("max_terms must be positive");

  Ctx ctx;
  ctx.max_terms = max_terms;
  expand_rec(from_curve(curve), {}, Rational(0), ctx);

  std::sort(ctx.branches.begin(), ctx.branches.end(),
            [](const PuiseuxBranch& x, const PuiseuxBranch& y) {
              Rational ex = x.exp_t(), ey = y.exp_t();
              if (ex != ey) return ey < ex;
              int c = AlgebraicNumber::compare(x.lead_coeff(), y.lead_coeff());
              if (c != 0) return c < 0;
              return x.terms.size() < y.terms.size();
            });

  PuiseuxResult out;
  out.branches = std::move(ctx.branches);
  out.complex_count = ctx.complex_count;
  return out;
}

}  // namespace tangentinf
