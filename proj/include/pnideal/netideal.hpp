#pragma once

#include "pnideal/groebner.hpp"
#include "pnideal/polynomial.hpp"
#include "pnideal/proof_structure.hpp"
#include "pnideal/reduction.hpp"
#include "pnideal/roofgraph.hpp"

#include <set>
#include <utility>
#include <vector>

namespace pnideal {

struct IdealOptions {
  // deliberately mis-pair one axiom generator (mutation testing)
  bool sabotage = false;
};

struct Generator {
  Polynomial binomial;
  NodeId link = 0;
  AtomVar plus, minus;
};

struct GeneratorSet {
  std::vector<Generator> items;
  std::vector<Polynomial> polynomials() const;
};

GeneratorSet link_generators(const ProofStructure& g, const IdealOptions& opts = {});

using SimRelation = std::vector<std::pair<AtomVar, AtomVar>>;
// each pair stored once with first < second, sorted
SimRelation sim_relation(const ProofStructure& g, const IdealOptions& opts = {});

using PersistentPath = std::vector<AtomVar>;

struct BoundaryData {
  std::vector<AtomVar> U; // positive conclusion atoms
  std::vector<AtomVar> V; // negative conclusion atoms
  std::vector<std::size_t> sigma; // 0-based: path i runs V[sigma[i]] .. U[i]
  std::vector<Polynomial> generators() const;
};

std::vector<PersistentPath> persistent_paths(const ProofStructure& g,
                                             const IdealOptions& opts = {});
BoundaryData boundary(const ProofStructure& g, const IdealOptions& opts = {});

VarOrder order_zero(const ProofStructure& g, const IdealOptions& opts = {});
// survivors (vars still present after the sequence) first, then the
// eliminated ones, both in path order
VarOrder order_gamma(const ProofStructure& g, const NormalizationResult& seq,
                     const IdealOptions& opts = {});
VarOrder order_gamma(const ProofStructure& g, const std::set<AtomVar>& survivors,
                     const IdealOptions& opts = {});
VarOrder order_n(const ProofStructure& g, const IdealOptions& opts = {});

bool above_conclusion(const ProofStructure& g, AtomVar v);

OrderedGraph sim_graph(const ProofStructure& g, const VarOrder& o,
                       const IdealOptions& opts = {});
std::vector<Polynomial> generator_sequence(const ProofStructure& g, const VarOrder& o,
                                           const IdealOptions& opts = {});

ProofStructure combine_conclusions(const ProofStructure& g);

// variables of g, as a set
std::set<AtomVar> variable_set(const ProofStructure& g);
// polynomials all of whose variables lie in `vars`
std::vector<Polynomial> restrict_to(std::span<const Polynomial> F, const std::set<AtomVar>& vars);

} // namespace pnideal
