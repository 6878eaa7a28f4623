#include "pnideal/groebner.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <set>

namespace pnideal {

namespace {

template <bool EarlyStop>
Basis buchberger(std::span<const Polynomial> F, const VarOrder& o,
                 const BuchbergerOptions& opts) {
  Basis G{{}, o};
  std::vector<Monomial> lm;
  for (auto& f : F) {
    if (f.is_zero())
      throw Error("Buchberger input contains the zero polynomial");
    G.polys.push_back(f);
    lm.push_back(leading_monomial(f, o));
  }
  std::set<std::pair<std::size_t, std::size_t>> B;
  for (std::size_t j = 0; j < G.polys.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      B.emplace(i, j);

  auto criterion = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < G.polys.size(); ++k) {
      if (k == i || k == j)
        continue;
      auto ik = std::minmax(i, k);
      auto jk = std::minmax(j, k);
      if (B.count({ik.first, ik.second}) || B.count({jk.first, jk.second}))
        continue;
      if (lm[k].divides(l))
        return true;
    }
    return false;
  };

  std::size_t iterations = 0;
  while (!B.empty()) {
    if (++iterations > opts.max_iterations)
      throw Error("Buchberger iteration ceiling reached");
    auto [i, j] = *B.begin();
    Monomial l = Monomial::lcm(lm[i], lm[j]);
    if (l != lm[i] * lm[j] && !criterion(i, j, l)) {
      Polynomial s = s_polynomial(G.polys[i], G.polys[j], o);
      Polynomial r = EarlyStop ? divide_early_stopping(s, G.polys, o).remainder
                               : divide_standard(s, G.polys, o).remainder;
      if (!r.is_zero()) {
        if constexpr (EarlyStop)
          r = monic(r, o);
        std::size_t t = G.polys.size();
        lm.push_back(leading_monomial(r, o));
        G.polys.push_back(std::move(r));
        for (std::size_t a = 0; a < t; ++a)
          B.emplace(a, t);
      }
    }
    B.erase({i, j});
  }
  return G;
}

} // namespace

Basis buchberger_standard(std::span<const Polynomial> F, const VarOrder& o,
                          BuchbergerOptions opts) {
  return buchberger<false>(F, o, opts);
}

Basis buchberger_es(std::span<const Polynomial> F, const VarOrder& o,
                    BuchbergerOptions opts) {
  return buchberger<true>(F, o, opts);
}

bool reduces_to_zero(const Polynomial& f, const Basis& G) {
  return divide_standard(f, G.polys, G.order).remainder.is_zero();
}

bool is_groebner(const Basis& G) {
  for (std::size_t j = 0; j < G.polys.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!reduces_to_zero(s_polynomial(G.polys[i], G.polys[j], G.order), G))
        return false;
  return true;
}

bool is_minimal(const Basis& G) {
  std::vector<Monomial> lm;
  for (auto& g : G.polys)
    lm.push_back(leading_monomial(g, G.order));
  for (std::size_t i = 0; i < lm.size(); ++i)
    for (std::size_t k = 0; k < lm.size(); ++k)
      if (i != k && lm[k].divides(lm[i]))
        return false;
  return true;
}

std::vector<Polynomial> canonical_set(std::span<const Polynomial> F, const VarOrder& o) {
  std::vector<Polynomial> out;
  for (auto& f : F)
    if (!f.is_zero())
      out.push_back(monic(f, o));
  // descending leading monomial, then the remaining terms structurally
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto c = compare(leading_monomial(a, o), leading_monomial(b, o), o);
    if (c != 0)
      return c > 0;
    return a.terms() < b.terms();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Basis reduced_basis(const Basis& G) {
  if (!is_groebner(G))
    throw Error("reduced_basis: input is not a Groebner basis");
  const VarOrder& o = G.order;
  std::vector<Polynomial> ps = canonical_set(G.polys, o);
  // drop elements whose leading monomial is a multiple of another's; with
  // equal leading monomials keep the first
  std::vector<Polynomial> minimal;
  std::vector<Monomial> lms;
  for (auto& p : ps)
    lms.push_back(leading_monomial(p, o));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    bool drop = false;
    for (std::size_t k = 0; k < ps.size() && !drop; ++k) {
      if (k == i || !lms[k].divides(lms[i]))
        continue;
      if (lms[k] != lms[i] || k < i)
        drop = true;
    }
    if (!drop)
      minimal.push_back(ps[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i)
        others.push_back(minimal[k]);
    // the leading term survives: no other leading monomial divides it
    reduced.push_back(monic(divide_standard(minimal[i], others, o).remainder, o));
  }
  return Basis{canonical_set(reduced, o), o};
}

bool ideal_equal(std::span<const Polynomial> F1, std::span<const Polynomial> F2,
                 const VarOrder& o) {
  auto canon = [&](std::span<const Polynomial> F) {
    std::vector<Polynomial> nz;
    for (auto& f : F)
      if (!f.is_zero())
        nz.push_back(f);
    if (nz.empty())
      return std::vector<Polynomial>{};
    return reduced_basis(buchberger_standard(nz, o)).polys;
  };
  return canon(F1) == canon(F2);
}

} // namespace pnideal
