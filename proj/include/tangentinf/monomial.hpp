#pragma once

#include <cstdint>
#include <vector>

namespace tangentinf {

// Power product x_0^{e_0} ... x_{n-1}^{e_{n-1}}. Exponents are machine words;
// the parser caps them at 2^20 so degree sums never overflow.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  bool is_one() const;
  std::uint64_t degree() const;
  std::uint64_t degree_in_range(int lo, int hi) const;  // [lo, hi)

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // this | o
  Monomial divide(const Monomial& o) const;    // this / o, requires o | this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Term orders used across the symbolic pipeline. Block places variables
// [0, split) in a leading group compared before the rest, which makes it an
// elimination order for that group.
struct TermOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  int split = 0;  // only meaningful for Block

  static TermOrder lex() { return {Kind::Lex, 0}; }
  static TermOrder grevlex() { return {Kind::GrevLex, 0}; }
  static TermOrder block(int split_) { return {Kind::Block, split_}; }

  // memcmp convention: negative when a < b, zero when equal, positive when a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

// Canonical storage comparator for polynomial term maps: graded lex ascending.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace tangentinf
