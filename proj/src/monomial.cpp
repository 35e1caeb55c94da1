#include "tangentinf/monomial.hpp"

#include "tangentinf/errors.hpp"

namespace tangentinf {

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

std::uint64_t Monomial::degree_in_range(int lo, int hi) const {
  std::uint64_t d = 0;
  for (int i = lo; i < hi && i < nvars(); ++i) d += e[static_cast<size_t>(i)];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e.size() != o.e.size()) throw Error("monomial arity mismatch");
  Monomial r(nvars());
  for (size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(e[i]) + o.e[i];
    if (s > 0x7fffffffu) throw Error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (e.size() != o.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  if (!o.divides(*this)) throw Error("monomial division is not exact");
  Monomial r(nvars());
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size()) throw Error("monomial arity mismatch");
  Monomial r(a.nvars());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size()) throw Error("monomial arity mismatch");
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

namespace {

int lex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    auto ai = a.e[static_cast<size_t>(i)];
    auto bi = b.e[static_cast<size_t>(i)];
    if (ai != bi) return ai < bi ? -1 : 1;
  }
  return 0;
}

// Graded reverse lex restricted to variables [lo, hi).
int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::uint64_t da = a.degree_in_range(lo, hi);
  std::uint64_t db = b.degree_in_range(lo, hi);
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: a > b when the last nonzero entry of a-b is negative.
  for (int i = hi - 1; i >= lo; --i) {
    auto ai = a.e[static_cast<size_t>(i)];
    auto bi = b.e[static_cast<size_t>(i)];
    if (ai != bi) return ai < bi ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
  int n = a.nvars();
  if (n != b.nvars()) throw Error("monomial arity mismatch");
  switch (kind) {
    case Kind::Lex:
      return lex_cmp(a, b, 0, n);
    case Kind::GrevLex:
      return grevlex_cmp(a, b, 0, n);
    case Kind::Block: {
      int s = split < 0 ? 0 : (split > n ? n : split);
      if (int c = grevlex_cmp(a, b, 0, s)) return c;
      return grevlex_cmp(a, b, s, n);
    }
  }
  return 0;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = a.degree();
  std::uint64_t db = b.degree();
  if (da != db) return da < db;
  return lex_cmp(a, b, 0, a.nvars()) < 0;
}

}  // namespace tangentinf
