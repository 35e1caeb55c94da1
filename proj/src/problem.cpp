#include "tangentinf/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tangentinf/errors.hpp"

namespace tangentinf {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw ProblemError(path + ":" + std::to_string(line) + ": " + msg);
}

// Scale so the coefficient gcd is 1; the sign of the polynomial is preserved,
// which matters for inequalities.
MultiPoly positive_normalized(const MultiPoly& p) {
  Rational c = p.content();
  if (c.is_zero() || c.is_one()) return p;
  return p.scaled(c.reciprocal());
}

}  // namespace

int Problem::original_count() const {
  int n = 0;
  for (bool b : lifted) n += b ? 0 : 1;
  return n;
}

std::vector<int> Problem::original_vars() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (!lifted[i]) out.push_back(i);
  return out;
}

Problem Problem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

Problem Problem::from_text(const std::string& text, const std::string& path) {
  Problem p;
  p.source_path = path;
  bool saw_objective = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) fail(path, lineno, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));

    if (key == "vars") {
      if (!p.vars.empty()) fail(path, lineno, "duplicate 'vars' line");
      std::istringstream vs(value);
      std::string v;
      while (vs >> v) {
        if (!is_ident(v)) fail(path, lineno, "invalid variable name '" + v + "'");
        if (std::find(p.vars.begin(), p.vars.end(), v) != p.vars.end())
          fail(path, lineno, "duplicate variable '" + v + "'");
        p.vars.push_back(v);
      }
      if (p.vars.empty()) fail(path, lineno, "'vars' lists no variables");
      p.lifted.assign(p.vars.size(), false);
      continue;
    }
    if (key == "regular") {
      if (value == "true")
        p.regular = true;
      else if (value == "false")
        p.regular = false;
      else
        fail(path, lineno, "'regular' must be true or false");
      continue;
    }
    if (p.vars.empty()) fail(path, lineno, "'vars' must come before '" + key + "'");

    auto parse_here = [&](const std::string& s) {
      try {
        return parse_poly(s, p.vars);
      } catch (const ParseError& e) {
        fail(path, lineno, e.what());
      }
    };

    if (key == "objective") {
      if (saw_objective) fail(path, lineno, "duplicate 'objective' line");
      p.objective = parse_here(value);
      saw_objective = true;
    } else if (key == "eq") {
      p.equalities.push_back(parse_here(value));
    } else if (key == "ineq") {
      p.inequalities.push_back(parse_here(value));
    } else if (key == "lift") {
      // lift: <var> abs(<expr>)
      std::istringstream ls(value);
      std::string vname;
      ls >> vname;
      auto it = std::find(p.vars.begin(), p.vars.end(), vname);
      if (it == p.vars.end())
        fail(path, lineno, "lifted variable '" + vname + "' is not in vars");
      int vi = static_cast<int>(it - p.vars.begin());
      std::string rest;
      std::getline(ls, rest);
      rest = trim(rest);
      if (rest.size() < 5 || rest.substr(0, 4) != "abs(" || rest.back() != ')')
        fail(path, lineno, "expected 'lift: <var> abs(<expr>)'");
      MultiPoly expr = parse_here(rest.substr(4, rest.size() - 5));
      if (expr.uses_var(vi))
        fail(path, lineno, "lifting expression may not use the lifted variable");
      if (p.lifted[vi]) fail(path, lineno, "variable '" + vname + "' lifted twice");
      p.lifted[vi] = true;
      p.liftings.push_back({vi, expr});
    } else {
      fail(path, lineno, "unknown key '" + key + "'");
    }
  }
  if (p.vars.empty()) throw ProblemError(path + ": missing 'vars' line");
  if (!saw_objective) throw ProblemError(path + ": missing 'objective' line");
  for (const auto& l : p.liftings)
    for (const auto& m : p.liftings)
      if (l.var != m.var && m.expr.uses_var(l.var))
        throw ProblemError(path + ": lifting expressions may not use lifted variables");
  // var = |expr| becomes var^2 = expr^2 with var >= 0.
  for (const auto& l : p.liftings) {
    MultiPoly v = MultiPoly::variable(p.nvars(), l.var);
    p.equalities.push_back(v * v - l.expr * l.expr);
    p.inequalities.push_back(v);
  }
  p.normalize();
  return p;
}

void Problem::normalize() {
  std::vector<MultiPoly> eqs, ineqs;
  for (const auto& g : equalities) {
    if (g.is_constant()) {
      if (!g.is_zero()) trivially_infeasible = true;
      continue;
    }
    MultiPoly n = g.primitive_normalized();
    if (std::find(eqs.begin(), eqs.end(), n) == eqs.end()) eqs.push_back(n);
  }
  for (const auto& h : inequalities) {
    if (h.is_constant()) {
      if (h.constant_value().sign() < 0) trivially_infeasible = true;
      continue;
    }
    MultiPoly n = positive_normalized(h);
    if (std::find(ineqs.begin(), ineqs.end(), n) == ineqs.end()) ineqs.push_back(n);
  }
  equalities = std::move(eqs);
  inequalities = std::move(ineqs);
  if (original_count() == 0)
    throw ProblemError(source_path + ": every variable is lifted");
}

}  // namespace tangentinf
