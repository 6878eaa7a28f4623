#pragma once

#include "pnideal/atom_var.hpp"
#include "pnideal/formula.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pnideal {

enum class NodeKind { Axiom, Cut, Tensor, Par, Conclusion };
enum class PremisePos { Left, Right, Only };

std::string to_string(NodeKind k);
std::string to_string(PremisePos p);
NodeKind parse_node_kind(const std::string& s);
PremisePos parse_premise_pos(const std::string& s);

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Axiom;
};

struct Edge {
  EdgeId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  Formula formula = Formula::atom("A");
  PremisePos pos = PremisePos::Only;
};

// Directed multigraph of links. Nothing is checked on insertion; use
// validate() / is_proof_structure() on graphs of unknown origin.
class ProofStructure {
public:
  void add_node(Node n);
  void add_edge(Edge e);
  NodeId add_node(NodeKind k);
  void remove_node(NodeId id);
  void remove_edge(EdgeId id);
  Edge& mutable_edge(EdgeId id);

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }

  // incoming edges ordered left, right (or the single `only` edge)
  std::vector<EdgeId> premises(NodeId id) const;
  // outgoing edges in id order
  std::vector<EdgeId> conclusions(NodeId id) const;
  std::vector<NodeId> nodes_of_kind(NodeKind k) const;
  std::vector<NodeId> conclusion_nodes() const { return nodes_of_kind(NodeKind::Conclusion); }
  // premise edge of each conclusion node, in node id order
  std::vector<EdgeId> conclusion_edges() const;

  std::vector<AtomVar> variables() const;
  std::size_t cut_count() const { return nodes_of_kind(NodeKind::Cut).size(); }

  // ids never reused: fresh ids exceed everything seen so far
  NodeId fresh_node_id() { return next_node_++; }
  EdgeId fresh_edge_id() { return next_edge_++; }
  NodeId next_node_id() const { return next_node_; }
  EdgeId next_edge_id() const { return next_edge_; }

private:
  std::map<NodeId, Node> nodes_;
  std::map<EdgeId, Edge> edges_;
  NodeId next_node_ = 0;
  EdgeId next_edge_ = 0;
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

ValidationResult validate(const ProofStructure& g);
inline bool is_proof_structure(const ProofStructure& g) { return validate(g).ok; }

// equal up to renaming nodes; edge ids, formulas and positions must agree
bool same_up_to_node_ids(const ProofStructure& a, const ProofStructure& b);
// a string that identifies the structure up to node ids
std::string node_free_key(const ProofStructure& g);
// identifies the structure up to renaming both nodes and edges
std::string shape_key(const ProofStructure& g);

} // namespace pnideal
