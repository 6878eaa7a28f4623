#include "pnideal/proof_structure.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace pnideal {

std::string to_string(NodeKind k) {
  switch (k) {
  case NodeKind::Axiom: return "ax";
  case NodeKind::Cut: return "cut";
  case NodeKind::Tensor: return "tensor";
  case NodeKind::Par: return "par";
  case NodeKind::Conclusion: return "concl";
  }
  return "?";
}

std::string to_string(PremisePos p) {
  switch (p) {
  case PremisePos::Left: return "left";
  case PremisePos::Right: return "right";
  case PremisePos::Only: return "only";
  }
  return "?";
}

NodeKind parse_node_kind(const std::string& s) {
  if (s == "ax") return NodeKind::Axiom;
  if (s == "cut") return NodeKind::Cut;
  if (s == "tensor") return NodeKind::Tensor;
  if (s == "par") return NodeKind::Par;
  if (s == "concl") return NodeKind::Conclusion;
  throw ParseError("unknown node kind '" + s + "'");
}

PremisePos parse_premise_pos(const std::string& s) {
  if (s == "left") return PremisePos::Left;
  if (s == "right") return PremisePos::Right;
  if (s == "only") return PremisePos::Only;
  throw ParseError("unknown premise position '" + s + "'");
}

void ProofStructure::add_node(Node n) {
  if (!nodes_.emplace(n.id, n).second)
    throw StructureError("duplicate node id " + std::to_string(n.id));
  next_node_ = std::max(next_node_, n.id + 1);
}

NodeId ProofStructure::add_node(NodeKind k) {
  NodeId id = fresh_node_id();
  add_node(Node{id, k});
  return id;
}

void ProofStructure::add_edge(Edge e) {
  EdgeId id = e.id;
  if (!edges_.emplace(id, std::move(e)).second)
    throw StructureError("duplicate edge id " + std::to_string(id));
  next_edge_ = std::max(next_edge_, id + 1);
}

void ProofStructure::remove_node(NodeId id) { nodes_.erase(id); }
void ProofStructure::remove_edge(EdgeId id) { edges_.erase(id); }

Edge& ProofStructure::mutable_edge(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end())
    throw StructureError("no edge " + std::to_string(id));
  return it->second;
}

const Node& ProofStructure::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end())
    throw StructureError("no node " + std::to_string(id));
  return it->second;
}

const Edge& ProofStructure::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end())
    throw StructureError("no edge " + std::to_string(id));
  return it->second;
}

std::vector<EdgeId> ProofStructure::premises(NodeId id) const {
  std::vector<EdgeId> out;
  for (auto& [eid, e] : edges_)
    if (e.dst == id)
      out.push_back(eid);
  std::stable_sort(out.begin(), out.end(), [&](EdgeId a, EdgeId b) {
    return static_cast<int>(edges_.at(a).pos) < static_cast<int>(edges_.at(b).pos);
  });
  return out;
}

std::vector<EdgeId> ProofStructure::conclusions(NodeId id) const {
  std::vector<EdgeId> out;
  for (auto& [eid, e] : edges_)
    if (e.src == id)
      out.push_back(eid);
  return out;
}

std::vector<NodeId> ProofStructure::nodes_of_kind(NodeKind k) const {
  std::vector<NodeId> out;
  for (auto& [id, n] : nodes_)
    if (n.kind == k)
      out.push_back(id);
  return out;
}

std::vector<EdgeId> ProofStructure::conclusion_edges() const {
  std::vector<EdgeId> out;
  for (NodeId c : conclusion_nodes()) {
    auto ps = premises(c);
    if (ps.size() != 1)
      throw StructureError("conclusion node " + std::to_string(c) +
                           " does not have exactly one premise");
    out.push_back(ps[0]);
  }
  return out;
}

std::vector<AtomVar> ProofStructure::variables() const {
  std::vector<AtomVar> out;
  for (auto& [id, e] : edges_)
    for (std::uint32_t i = 0; i < e.formula.atom_count(); ++i)
      out.push_back(AtomVar{id, i});
  return out;
}

ValidationResult validate(const ProofStructure& g) {
  ValidationResult r;
  auto diag = [&](std::string s) {
    r.ok = false;
    r.diagnostics.push_back(std::move(s));
  };
  for (auto& [id, e] : g.edges()) {
    if (!g.has_node(e.src))
      diag("edge " + std::to_string(id) + ": unknown source node " + std::to_string(e.src));
    if (!g.has_node(e.dst))
      diag("edge " + std::to_string(id) + ": unknown target node " + std::to_string(e.dst));
  }
  if (!r.ok)
    return r;
  for (auto& [id, n] : g.nodes()) {
    std::string where = to_string(n.kind) + " node " + std::to_string(id);
    auto in = g.premises(id);
    auto out = g.conclusions(id);
    auto arity = [&](std::size_t p, std::size_t c) {
      if (in.size() != p || out.size() != c) {
        diag(where + ": expected " + std::to_string(p) + " premise(s) and " +
             std::to_string(c) + " conclusion(s), found " + std::to_string(in.size()) +
             " and " + std::to_string(out.size()));
        return false;
      }
      return true;
    };
    auto binary_positions = [&] {
      if (g.edge(in[0]).pos != PremisePos::Left || g.edge(in[1]).pos != PremisePos::Right) {
        diag(where + ": premises must be one left and one right");
        return false;
      }
      return true;
    };
    switch (n.kind) {
    case NodeKind::Axiom:
      if (arity(0, 2) && !(g.edge(out[1]).formula == g.edge(out[0]).formula.negate()))
        diag(where + ": conclusions " + g.edge(out[0]).formula.to_string() + " and " +
             g.edge(out[1]).formula.to_string() + " are not dual");
      break;
    case NodeKind::Cut:
      if (arity(2, 0) && binary_positions() &&
          !(g.edge(in[1]).formula == g.edge(in[0]).formula.negate()))
        diag(where + ": premises " + g.edge(in[0]).formula.to_string() + " and " +
             g.edge(in[1]).formula.to_string() + " are not dual");
      break;
    case NodeKind::Tensor:
    case NodeKind::Par:
      if (arity(2, 1) && binary_positions()) {
        const Formula& a = g.edge(in[0]).formula;
        const Formula& b = g.edge(in[1]).formula;
        Formula want = n.kind == NodeKind::Tensor ? Formula::tensor(a, b) : Formula::par(a, b);
        if (!(g.edge(out[0]).formula == want))
          diag(where + ": conclusion " + g.edge(out[0]).formula.to_string() +
               " should be " + want.to_string());
      }
      break;
    case NodeKind::Conclusion:
      if (arity(1, 0) && g.edge(in[0]).pos != PremisePos::Only)
        diag(where + ": premise position must be 'only'");
      break;
    }
  }
  for (auto& [id, e] : g.edges()) {
    NodeKind k = g.node(e.dst).kind;
    bool binary = k == NodeKind::Cut || k == NodeKind::Tensor || k == NodeKind::Par;
    if (binary && e.pos == PremisePos::Only)
      diag("edge " + std::to_string(id) + ": binary link premise marked 'only'");
  }
  return r;
}

namespace {

std::string node_signature(const ProofStructure& g, NodeId id) {
  std::ostringstream os;
  os << to_string(g.node(id).kind) << "[";
  for (EdgeId e : g.premises(id))
    os << "in" << e << ":" << to_string(g.edge(e).pos) << ",";
  for (EdgeId e : g.conclusions(id))
    os << "out" << e << ",";
  os << "]";
  return os.str();
}

} // namespace

std::string node_free_key(const ProofStructure& g) {
  std::ostringstream os;
  for (auto& [id, e] : g.edges())
    os << id << ":" << e.formula.to_string() << ";";
  std::vector<std::string> sigs;
  for (auto& [id, n] : g.nodes())
    sigs.push_back(node_signature(g, id));
  std::sort(sigs.begin(), sigs.end());
  for (auto& s : sigs)
    os << s;
  return os.str();
}

bool same_up_to_node_ids(const ProofStructure& a, const ProofStructure& b) {
  return node_free_key(a) == node_free_key(b);
}

std::string shape_key(const ProofStructure& g) {
  std::map<NodeId, int> nlabel;
  std::map<EdgeId, int> elabel;
  std::vector<NodeId> order;
  // incident edges of a node in a canonical order
  auto incident = [&](NodeId n) {
    std::vector<EdgeId> es = g.premises(n);
    auto outs = g.conclusions(n);
    std::sort(outs.begin(), outs.end(), [&](EdgeId x, EdgeId y) {
      return g.edge(x).formula.to_string() < g.edge(y).formula.to_string();
    });
    es.insert(es.end(), outs.begin(), outs.end());
    return es;
  };
  std::function<void(NodeId)> visit = [&](NodeId n) {
    if (nlabel.count(n))
      return;
    nlabel[n] = static_cast<int>(nlabel.size());
    order.push_back(n);
    for (EdgeId e : incident(n)) {
      if (!elabel.count(e))
        elabel[e] = static_cast<int>(elabel.size());
      const Edge& ed = g.edge(e);
      visit(ed.src == n ? ed.dst : ed.src);
    }
  };
  for (NodeId c : g.conclusion_nodes())
    visit(c);
  for (auto& [id, n] : g.nodes())
    visit(id);
  std::vector<std::string> rows;
  for (auto& [id, e] : g.edges()) {
    std::ostringstream os;
    os << elabel.at(id) << ":" << nlabel.at(e.src) << "->" << nlabel.at(e.dst) << ":"
       << e.formula.to_string() << ":" << to_string(e.pos);
    rows.push_back(os.str());
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  for (NodeId n : order)
    os << to_string(g.node(n).kind) << ",";
  for (auto& r : rows)
    os << r << ";";
  return os.str();
}

} // namespace pnideal
