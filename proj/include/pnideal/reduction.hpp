#pragma once

#include "pnideal/error.hpp"
#include "pnideal/proof_structure.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pnideal {

enum class RedexKind { A, M };

// a-redex: cut on (upper, axiom_edge) where axiom_edge leaves the axiom whose
//   other conclusion is `lower`
// m-redex: cut on (tensor_out, par_out)
struct Redex {
  RedexKind kind = RedexKind::A;
  NodeId cut = 0;
  NodeId axiom = -1;
  EdgeId upper = -1, axiom_edge = -1, lower = -1;
  NodeId tensor = -1, par = -1;
  EdgeId tensor_out = -1, par_out = -1;

  std::vector<NodeId> node_ids() const;
  std::vector<EdgeId> edge_ids() const;
  std::string describe() const;
  friend bool operator==(const Redex&, const Redex&) = default;
};

class StaleRedex : public StructureError {
public:
  using StructureError::StructureError;
};

// T maps variables of the reduct back into the original (injective);
// S retracts the original onto the reduct
struct VarMap {
  std::map<AtomVar, AtomVar> t;
  std::map<AtomVar, AtomVar> s;

  AtomVar T(AtomVar v) const;
  AtomVar S(AtomVar v) const;
  static VarMap identity(const std::vector<AtomVar>& vars);
  // first: pi0 -> pi1, second: pi1 -> pi2; result pi0 -> pi2
  static VarMap compose(const VarMap& first, const VarMap& second);
  friend bool operator==(const VarMap&, const VarMap&) = default;
};

std::vector<Redex> find_redexes(const ProofStructure& g);
bool redex_present(const ProofStructure& g, const Redex& r);

struct Reduction {
  ProofStructure result;
  VarMap map;
};

Reduction reduce(const ProofStructure& g, const Redex& r);

// sum over cuts of |A|
std::size_t cut_weight(const ProofStructure& g);

struct NormalizationResult {
  ProofStructure normal;
  VarMap map;
  std::vector<Redex> trace;
};

// picks the first redex at every step unless a chooser is supplied; the
// chooser gets the current redex list and returns an index into it
using RedexChooser = std::function<std::size_t(const std::vector<Redex>&)>;
NormalizationResult normalize(const ProofStructure& g, const RedexChooser& choose = {});

// applies `steps` (indices into find_redexes at each stage)
NormalizationResult run_steps(const ProofStructure& g, const std::vector<std::size_t>& steps);

// every distinct (normal form, composite T) reachable by some reduction
// order; structures compared up to node ids. S is not compared: it depends
// on the order in which axiom chains collapse
struct Outcome {
  ProofStructure normal;
  VarMap map;
};
std::vector<Outcome> all_normalizations(const ProofStructure& g, std::size_t max_states = 200000);

ProofStructure eta_expand(const ProofStructure& g);
// expands a single compound axiom
ProofStructure eta_expand_axiom(const ProofStructure& g, NodeId axiom);

} // namespace pnideal
