#pragma once

#include "pnideal/formula.hpp"
#include "pnideal/proof_structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pnideal {

enum class Rule { Axiom, Cut, Tensor, Par };

std::string to_string(Rule r);

// Rules consume occurrences by position in the current sequent.
//   ax A                 |- ~A, A
//   tensor(l, r, i, j)   |- G, A*B, D   (A = l[i], B = r[j])
//   par(p, i, j)         A|B replaces the earlier of p[i], p[j]
//   cut(l, r, i, j)      |- G, D        (r[j] must be ~l[i])
struct SequentProof {
  Rule rule = Rule::Axiom;
  std::optional<Formula> formula;
  std::vector<SequentProof> children;
  std::vector<std::size_t> occ;

  static SequentProof axiom(Formula a);
  static SequentProof tensor(SequentProof l, SequentProof r, std::size_t i, std::size_t j);
  static SequentProof par(SequentProof p, std::size_t i, std::size_t j);
  static SequentProof cut(SequentProof l, SequentProof r, std::size_t i, std::size_t j);

  std::size_t rule_count() const;
  std::size_t cut_count() const;
};

// throws TranslationError naming the offending rule
std::vector<Formula> end_sequent(const SequentProof& p);
ProofStructure translate(const SequentProof& p);

} // namespace pnideal
