#include "pnideal/verify.hpp"

#include <random>

namespace pnideal {

namespace {

std::size_t position_of(const SequentProof& p, const Formula& f) {
  auto seq = end_sequent(p);
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == f)
      return i;
  return 0;
}

} // namespace

SequentProof identity_proof(const Formula& a) {
  if (a.is_atom())
    return SequentProof::axiom(a);
  const Formula& l = a.left();
  const Formula& r = a.right();
  if (a.kind() == Formula::Kind::Tensor) {
    // |- ~B, B*C, ~C  ->  |- ~C|~B, B*C
    auto pb = identity_proof(l), pc = identity_proof(r);
    std::size_t i = position_of(pb, l), j = position_of(pc, r);
    return SequentProof::par(SequentProof::tensor(std::move(pb), std::move(pc), i, j), 2, 0);
  }
  // |- C, ~C*~B, B  ->  |- B|C, ~C*~B
  auto pc = identity_proof(r), pb = identity_proof(l);
  std::size_t i = position_of(pc, r.negate()), j = position_of(pb, l.negate());
  return SequentProof::par(SequentProof::tensor(std::move(pc), std::move(pb), i, j), 2, 0);
}

namespace {

struct Gen {
  std::mt19937_64 rng;
  bool atomic_axioms = true;

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }
  bool chance(unsigned pct) { return below(100) < pct; }

  Formula atom() {
    static const char* names[] = {"A", "B", "C"};
    return Formula::atom(names[below(3)], chance(50) ? Sign::Pos : Sign::Neg);
  }

  Formula formula(int depth) {
    if (depth == 0 || chance(60))
      return atom();
    Formula l = formula(depth - 1), r = formula(depth - 1);
    return chance(50) ? Formula::tensor(l, r) : Formula::par(l, r);
  }

  struct Out {
    SequentProof proof;
    std::vector<Formula> seq;
  };

  Out axiom() {
    Formula a = (atomic_axioms || chance(75)) ? atom() : formula(1);
    auto p = SequentProof::axiom(a);
    return {p, end_sequent(p)};
  }

  Out gen(std::size_t budget) {
    if (budget <= 1)
      return axiom();
    unsigned roll = static_cast<unsigned>(below(100));
    if (budget >= 3 && roll < 45)
      return cut(budget);
    if (roll < 70 && budget >= 3)
      return tensor(budget);
    return par(budget);
  }

  std::pair<std::size_t, std::size_t> split(std::size_t b) {
    std::size_t l = 1 + below(b - 1);
    return {l, b - l};
  }

  Out tensor(std::size_t budget) {
    auto [bl, br] = split(budget - 1);
    Out l = gen(bl), r = gen(br);
    auto p = SequentProof::tensor(l.proof, r.proof, below(l.seq.size()), below(r.seq.size()));
    return {p, end_sequent(p)};
  }

  Out par(std::size_t budget) {
    Out c = gen(budget - 1);
    if (c.seq.size() < 2)
      return c;
    std::size_t i = below(c.seq.size()), j = below(c.seq.size() - 1);
    if (j >= i)
      ++j;
    auto p = SequentProof::par(c.proof, i, j);
    return {p, end_sequent(p)};
  }

  Out cut(std::size_t budget) {
    auto [bl, br] = split(budget - 1);
    Out l = gen(bl);
    std::size_t i = below(l.seq.size());
    Formula a = l.seq[i];
    Formula na = a.negate();
    unsigned how = static_cast<unsigned>(below(100));
    if (how < 40) {
      Out r = gen(br);
      for (std::size_t j = 0; j < r.seq.size(); ++j)
        if (r.seq[j] == na) {
          auto p = SequentProof::cut(l.proof, r.proof, i, j);
          return {p, end_sequent(p)};
        }
    }
    SequentProof r = (!a.is_atom() && (atomic_axioms || how < 75)) ? identity_proof(a)
                                                                   : SequentProof::axiom(a);
    auto p = SequentProof::cut(l.proof, r, i, position_of(r, na));
    return {p, end_sequent(p)};
  }
};

} // namespace

SequentProof random_net(std::uint64_t seed, std::size_t max_rules, bool atomic_axioms) {
  Gen g{std::mt19937_64(seed), atomic_axioms};
  std::size_t lo = (max_rules + 1) / 2;
  if (lo == 0)
    lo = 1;
  std::size_t budget = lo + g.below(max_rules - lo + 1);
  return g.gen(budget).proof;
}

} // namespace pnideal
