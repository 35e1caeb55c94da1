#include "tangentinf/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "tangentinf/errors.hpp"

namespace tangentinf {

MultiPoly MultiPoly::constant(int nvars, Rational c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int k) {
  if (k < 0 || k >= nvars) throw Error("variable index out of range");
  Monomial m(nvars);
  m.e[static_cast<size_t>(k)] = 1;
  MultiPoly p(nvars);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(int nvars, Monomial m, Rational c) {
  if (m.nvars() != nvars) throw Error("monomial arity mismatch");
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Canonical order is graded, so the last term has maximal degree.
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int MultiPoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[static_cast<size_t>(var)]);
  return static_cast<int>(d);
}

bool MultiPoly::uses_var(int var) const {
  for (const auto& [m, c] : terms_)
    if (m.e[static_cast<size_t>(var)]) return true;
  return false;
}

bool MultiPoly::supported_in(int lo, int hi) const {
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if ((i < lo || i >= hi) && m.e[static_cast<size_t>(i)]) return false;
  return true;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw Error("monomial arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomial arity mismatch");
  MultiPoly r(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw Error("variable index out of range");
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.e[static_cast<size_t>(var)];
    if (!e) continue;
    Monomial d = m;
    d.e[static_cast<size_t>(var)] = e - 1;
    r.add_term(d, c * Rational(static_cast<long>(e)));
  }
  return r;
}

Rational MultiPoly::eval_exact(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw Error("evaluation arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      std::uint32_t e = m.e[static_cast<size_t>(i)];
      if (e) t *= x[static_cast<size_t>(i)].pow(static_cast<long>(e));
    }
    acc += t;
  }
  return acc;
}

double MultiPoly::eval_double(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw Error("evaluation arity mismatch");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < nvars_; ++i) {
      std::uint32_t e = m.e[static_cast<size_t>(i)];
      if (e) t *= std::pow(x[static_cast<size_t>(i)], static_cast<double>(e));
    }
    acc += t;
  }
  return acc;
}

std::pair<Monomial, Rational> MultiPoly::leading_term(const TermOrder& ord) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

Rational MultiPoly::content() const {
  Rational g(0);
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

MultiPoly MultiPoly::primitive_normalized() const {
  if (terms_.empty()) return *this;
  Rational g = content();
  if (terms_.rbegin()->second.sign() < 0) g = -g;
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
  return r;
}

MultiPoly MultiPoly::remap(int new_nvars, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw Error("remap arity mismatch");
  MultiPoly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_nvars);
    for (int i = 0; i < nvars_; ++i) {
      std::uint32_t e = m.e[static_cast<size_t>(i)];
      if (!e) continue;
      int j = var_map[static_cast<size_t>(i)];
      if (j < 0 || j >= new_nvars) throw Error("remap target out of range");
      nm.e[static_cast<size_t>(j)] += e;
    }
    r.add_term(nm, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& rep) const {
  if (rep.nvars() != nvars_) throw Error("substitution arity mismatch");
  // Powers of rep are built incrementally in increasing exponent order.
  std::vector<std::uint32_t> exps;
  for (const auto& [m, c] : terms_) exps.push_back(m.e[static_cast<size_t>(var)]);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  std::map<std::uint32_t, MultiPoly> powers;
  MultiPoly cur = constant(nvars_, Rational(1));
  std::uint32_t cur_e = 0;
  for (std::uint32_t e : exps) {
    for (; cur_e < e; ++cur_e) cur = cur * rep;
    powers.emplace(e, cur);
  }

  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    std::uint32_t e = rest.e[static_cast<size_t>(var)];
    rest.e[static_cast<size_t>(var)] = 0;
    r += powers.at(e) * MultiPoly::term(nvars_, rest, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
  if (static_cast<int>(var_names.size()) != nvars_) throw Error("name list arity mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending canonical order reads naturally: highest degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = neg ? -c : c;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      std::uint32_t e = m.e[static_cast<size_t>(i)];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += var_names[static_cast<size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << a.to_string();
    } else if (a.is_one()) {
      os << mono;
    } else {
      os << a.to_string() << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

constexpr size_t kMaxInput = 100000;
constexpr unsigned long kMaxExponent = 1u << 20;

struct Token {
  enum Kind { Plus, Minus, Star, Caret, Slash, LParen, RParen, Number, Ident, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Token::End, "", line, col};
    char c = s_[pos_];
    switch (c) {
      case '+': bump(); return {Token::Plus, "+", line, col};
      case '-': bump(); return {Token::Minus, "-", line, col};
      case '*': bump(); return {Token::Star, "*", line, col};
      case '^': bump(); return {Token::Caret, "^", line, col};
      case '/': bump(); return {Token::Slash, "/", line, col};
      case '(': bump(); return {Token::LParen, "(", line, col};
      case ')': bump(); return {Token::RParen, ")", line, col};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num += s_[pos_];
        bump();
      }
      return {Token::Number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        id += s_[pos_];
        bump();
      }
      return {Token::Ident, id, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      bump();
  }
  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  std::string_view s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : lex_(text), nvars_(static_cast<int>(vars.size())) {
    for (int i = 0; i < nvars_; ++i) {
      if (!var_index_.emplace(vars[static_cast<size_t>(i)], i).second)
        throw Error("duplicate variable name '" + vars[static_cast<size_t>(i)] + "'");
    }
    advance();
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    expect(Token::End, "end of input");
    return p;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k)
      throw ParseError("expected " + what + ", found '" + describe(tok_) + "'",
                       tok_.line, tok_.col);
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::End ? "end of input" : t.text;
  }

  MultiPoly expr() {
    bool neg = false;
    if (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      neg = tok_.kind == Token::Minus;
      advance();
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool sub = tok_.kind == Token::Minus;
      advance();
      MultiPoly t = term();
      if (sub)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (tok_.kind == Token::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (tok_.kind == Token::Caret) {
      advance();
      if (tok_.kind == Token::Minus)
        throw ParseError("exponent must be a non-negative integer", tok_.line, tok_.col);
      expect(Token::Number, "a non-negative integer exponent");
      unsigned long e = parse_exponent(tok_);
      advance();
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  static unsigned long parse_exponent(const Token& t) {
    if (t.text.size() > 7)
      throw ParseError("exponent too large", t.line, t.col);
    unsigned long e = std::stoul(t.text);
    if (e > kMaxExponent) throw ParseError("exponent too large", t.line, t.col);
    return e;
  }

  MultiPoly base() {
    if (tok_.kind == Token::LParen) {
      advance();
      MultiPoly p = expr();
      expect(Token::RParen, "')'");
      advance();
      return p;
    }
    if (tok_.kind == Token::Ident) {
      auto it = var_index_.find(tok_.text);
      if (it == var_index_.end())
        throw ParseError("unknown variable '" + tok_.text + "'", tok_.line, tok_.col);
      advance();
      return MultiPoly::variable(nvars_, it->second);
    }
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      // A sign is only part of a literal; "-x" is handled one level up.
      neg = true;
      advance();
      expect(Token::Number, "a number after '-'");
    }
    if (tok_.kind == Token::Number) {
      mpz_class num(tok_.text, 10);
      advance();
      mpz_class den(1);
      if (tok_.kind == Token::Slash) {
        advance();
        expect(Token::Number, "a denominator");
        den = mpz_class(tok_.text, 10);
        if (sgn(den) == 0)
          throw ParseError("zero denominator in rational literal", tok_.line, tok_.col);
        advance();
      }
      Rational r{neg ? mpz_class(-num) : num, den};
      return MultiPoly::constant(nvars_, r);
    }
    throw ParseError("expected a variable, number, or '('; found '" +
                         describe(tok_) + "'",
                     tok_.line, tok_.col);
  }

  Lexer lex_;
  Token tok_{Token::End, "", 0, 0};
  int nvars_;
  std::map<std::string, int> var_index_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  if (text.size() > kMaxInput) throw ParseError("expression exceeds size budget", 1, 1);
  Parser p(text, vars);
  return p.parse();
}

// ---------------------------------------------------------------------------
// Exact division and gcd.

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw Error("division by zero polynomial");
  if (p.nvars() != d.nvars()) throw Error("polynomial arity mismatch");
  if (p.is_zero()) return p;
  TermOrder ord = TermOrder::grevlex();
  auto [dm, dc] = d.leading_term(ord);
  MultiPoly h = p;
  MultiPoly q(p.nvars());
  while (!h.is_zero()) {
    auto [hm, hc] = h.leading_term(ord);
    if (!dm.divides(hm)) throw Error("polynomial division is not exact");
    Monomial qm = hm.divide(dm);
    Rational qc = hc / dc;
    q.add_term(qm, qc);
    h -= d * MultiPoly::term(p.nvars(), qm, qc);
  }
  return q;
}

namespace {

// View of p as a dense univariate polynomial in `var` with MultiPoly
// coefficients (the coefficients still live in the full variable space with
// `var` zeroed out).
std::vector<MultiPoly> coeffs_in_var(const MultiPoly& p, int var) {
  int d = p.degree_in(var);
  std::vector<MultiPoly> cs(static_cast<size_t>(d + 1), MultiPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    std::uint32_t e = rest.e[static_cast<size_t>(var)];
    rest.e[static_cast<size_t>(var)] = 0;
    cs[e].add_term(rest, c);
  }
  return cs;
}

MultiPoly from_coeffs_in_var(const std::vector<MultiPoly>& cs, int var, int nvars) {
  MultiPoly p(nvars);
  for (size_t e = 0; e < cs.size(); ++e) {
    if (cs[e].is_zero()) continue;
    Monomial shift(nvars);
    shift.e[static_cast<size_t>(var)] = static_cast<std::uint32_t>(e);
    p += cs[e] * MultiPoly::term(nvars, shift, Rational(1));
  }
  return p;
}

int highest_used_var(const MultiPoly& p, const MultiPoly& q) {
  for (int v = p.nvars() - 1; v >= 0; --v)
    if (p.uses_var(v) || q.uses_var(v)) return v;
  return -1;
}

// gcd of the coefficients of p viewed in `var` (recursive content).
MultiPoly content_in_var(const MultiPoly& p, int var) {
  MultiPoly g(p.nvars());
  for (const auto& c : coeffs_in_var(p, var)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? MultiPoly::constant(p.nvars(), Rational(1)) : g;
}

// One pseudo-remainder step chain: returns prem(a, b) in `var`.
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, int var) {
  int db = b.degree_in(var);
  auto bc = coeffs_in_var(b, var);
  const MultiPoly& lb = bc[static_cast<size_t>(db)];
  int da = a.degree_in(var);
  while (!a.is_zero() && (da = a.degree_in(var)) >= db) {
    auto ac = coeffs_in_var(a, var);
    const MultiPoly& la = ac[static_cast<size_t>(da)];
    Monomial shift(a.nvars());
    shift.e[static_cast<size_t>(var)] = static_cast<std::uint32_t>(da - db);
    a = a * lb - b * (la * MultiPoly::term(a.nvars(), shift, Rational(1)));
  }
  return a;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return q.primitive_normalized();
  if (q.is_zero()) return p.primitive_normalized();
  if (p.is_constant() || q.is_constant())
    return MultiPoly::constant(p.nvars(), Rational(1));
  int var = highest_used_var(p, q);
  // Neither side is constant, so some variable is in use.
  MultiPoly cp = content_in_var(p, var);
  MultiPoly cq = content_in_var(q, var);
  MultiPoly a = divide_exact(p, cp).primitive_normalized();
  MultiPoly b = divide_exact(q, cq).primitive_normalized();
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  // Primitive PRS: pseudo-remainders with contents stripped every round.
  while (true) {
    MultiPoly r = pseudo_rem(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) <= 0) {
      // Nonzero remainder free of `var`: the primitive parts are coprime.
      b = MultiPoly::constant(p.nvars(), Rational(1));
      break;
    }
    a = b;
    MultiPoly cr = content_in_var(r, var);
    b = divide_exact(r, cr).primitive_normalized();
  }
  MultiPoly cont = poly_gcd(cp, cq);
  return (cont * b).primitive_normalized();
}

MultiPoly squarefree_in(const MultiPoly& p, int var) {
  if (p.is_zero() || p.degree_in(var) <= 0) return p.primitive_normalized();
  MultiPoly d = p.derivative(var);
  MultiPoly g = poly_gcd(p, d);
  if (g.is_constant()) return p.primitive_normalized();
  return divide_exact(p, g).primitive_normalized();
}

}  // namespace tangentinf
