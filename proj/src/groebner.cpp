#include "tangentinf/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "tangentinf/errors.hpp"

namespace tangentinf {

namespace {

MultiPoly term_times(const MultiPoly& p, const Monomial& m, const Rational& c) {
  MultiPoly out(p.nvars());
  for (const auto& [mon, coef] : p.terms()) out.add_term(mon * m, coef * c);
  return out;
}

struct Pair {
  long sugar;
  int lcm_deg;
  int i, j;  // i < j
  Monomial lcm;
  bool operator<(const Pair& o) const {
    return std::tie(sugar, lcm_deg, i, j) < std::tie(o.sugar, o.lcm_deg, o.i, o.j);
  }
};

}  // namespace

MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis,
                      const TermOrder& ord, StepBudget& budget) {
  MultiPoly rem(p.nvars());
  while (!p.is_zero()) {
    auto [m, c] = p.leading_term(ord);
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      auto [bm, bc] = b.leading_term(ord);
      if (!bm.divides(m)) continue;
      budget.charge("groebner");
      p -= term_times(b, m.divide(bm), c / bc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  if (!rem.is_zero()) rem = rem.primitive_normalized();
  return rem;
}

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens,
                                      const TermOrder& ord, StepBudget& budget) {
  std::vector<MultiPoly> basis;
  std::vector<long> sugar;
  std::set<Pair> pending;
  std::set<std::pair<int, int>> done;

  auto add_pairs = [&](int j) {
    auto [mj, cj] = basis[j].leading_term(ord);
    for (int i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      auto [mi, ci] = basis[i].leading_term(ord);
      Monomial l = Monomial::lcm(mi, mj);
      if (l == mi * mj) {
        done.insert({i, j});  // coprime leading monomials reduce to zero
        continue;
      }
      long ld = static_cast<long>(l.degree());
      long sug = std::max(sugar[i] + ld - static_cast<long>(mi.degree()),
                          sugar[j] + ld - static_cast<long>(mj.degree()));
      pending.insert({sug, static_cast<int>(l.degree()), i, j, l});
    }
  };

  for (auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g.primitive_normalized());
    sugar.push_back(g.total_degree());
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    if (basis[pr.i].is_zero() || basis[pr.j].is_zero()) continue;

    // Chain criterion: a third element dividing the lcm whose pairs with both
    // endpoints were already processed makes this pair redundant.
    bool redundant = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !redundant; ++k) {
      if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
      auto [mk, ck] = basis[k].leading_term(ord);
      if (!mk.divides(pr.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) redundant = true;
    }
    done.insert({pr.i, pr.j});
    if (redundant) continue;

    auto [mi, ci] = basis[pr.i].leading_term(ord);
    auto [mj, cj] = basis[pr.j].leading_term(ord);
    MultiPoly s = term_times(basis[pr.i], pr.lcm.divide(mi), Rational(1) / ci) -
                  term_times(basis[pr.j], pr.lcm.divide(mj), Rational(1) / cj);
    MultiPoly nf = normal_form(std::move(s), basis, ord, budget);
    if (nf.is_zero()) continue;
    basis.push_back(std::move(nf));
    sugar.push_back(pr.sugar);
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Inter-reduce to the unique reduced basis (up to scaling): drop elements
  // whose leading monomial another element divides, then fully reduce each
  // survivor against the others.
  std::vector<MultiPoly> out;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    auto [mi, ci] = basis[i].leading_term(ord);
    bool drop = false;
    for (size_t j = 0; j < basis.size() && !drop; ++j) {
      if (j == i || basis[j].is_zero()) continue;
      auto [mj, cj] = basis[j].leading_term(ord);
      if (mj.divides(mi) && (mj == mi ? j < i : true)) drop = true;
    }
    if (!drop) out.push_back(basis[i]);
  }
  for (size_t i = 0; i < out.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    out[i] = normal_form(out[i], others, ord, budget);
  }
  std::erase_if(out, [](const MultiPoly& p) { return p.is_zero(); });
  std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return out;
}

}  // namespace tangentinf
