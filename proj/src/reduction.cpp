#include "pnideal/reduction.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <sstream>

namespace pnideal {

std::vector<NodeId> Redex::node_ids() const {
  if (kind == RedexKind::A)
    return {cut, axiom};
  return {cut, tensor, par};
}

std::vector<EdgeId> Redex::edge_ids() const {
  if (kind == RedexKind::A)
    return {upper, axiom_edge, lower};
  return {tensor_out, par_out};
}

std::string Redex::describe() const {
  std::ostringstream os;
  if (kind == RedexKind::A)
    os << "a-redex cut=" << cut << " ax=" << axiom << " edges=" << upper << ","
       << axiom_edge << "," << lower;
  else
    os << "m-redex cut=" << cut << " tensor=" << tensor << " par=" << par
       << " edges=" << tensor_out << "," << par_out;
  return os.str();
}

AtomVar VarMap::T(AtomVar v) const {
  auto it = t.find(v);
  if (it == t.end())
    throw Error("T undefined on " + to_string(v));
  return it->second;
}

AtomVar VarMap::S(AtomVar v) const {
  auto it = s.find(v);
  if (it == s.end())
    throw Error("S undefined on " + to_string(v));
  return it->second;
}

VarMap VarMap::identity(const std::vector<AtomVar>& vars) {
  VarMap m;
  for (auto v : vars) {
    m.t.emplace(v, v);
    m.s.emplace(v, v);
  }
  return m;
}

VarMap VarMap::compose(const VarMap& first, const VarMap& second) {
  VarMap m;
  for (auto& [v, w] : second.t)
    m.t.emplace(v, first.T(w));
  for (auto& [x, y] : first.s)
    m.s.emplace(x, second.S(y));
  return m;
}

namespace {

std::optional<Redex> redex_at(const ProofStructure& g, NodeId cut) {
  auto ps = g.premises(cut);
  if (ps.size() != 2)
    return std::nullopt;
  auto try_axiom = [&](EdgeId ax_edge, EdgeId other) -> std::optional<Redex> {
    NodeId ax = g.edge(ax_edge).src;
    if (g.node(ax).kind != NodeKind::Axiom)
      return std::nullopt;
    auto cs = g.conclusions(ax);
    if (cs.size() != 2)
      return std::nullopt;
    EdgeId lower = cs[0] == ax_edge ? cs[1] : cs[0];
    if (lower == other)
      return std::nullopt;
    Redex r;
    r.kind = RedexKind::A;
    r.cut = cut;
    r.axiom = ax;
    r.upper = other;
    r.axiom_edge = ax_edge;
    r.lower = lower;
    return r;
  };
  if (auto r = try_axiom(ps[1], ps[0]))
    return r;
  if (auto r = try_axiom(ps[0], ps[1]))
    return r;
  NodeKind k0 = g.node(g.edge(ps[0]).src).kind;
  NodeKind k1 = g.node(g.edge(ps[1]).src).kind;
  EdgeId te = -1, pe = -1;
  if (k0 == NodeKind::Tensor && k1 == NodeKind::Par)
    te = ps[0], pe = ps[1];
  else if (k0 == NodeKind::Par && k1 == NodeKind::Tensor)
    te = ps[1], pe = ps[0];
  else
    return std::nullopt;
  Redex r;
  r.kind = RedexKind::M;
  r.cut = cut;
  r.tensor = g.edge(te).src;
  r.par = g.edge(pe).src;
  r.tensor_out = te;
  r.par_out = pe;
  return r;
}

NodeId min_node(const Redex& r) {
  auto ns = r.node_ids();
  return *std::min_element(ns.begin(), ns.end());
}

} // namespace

std::vector<Redex> find_redexes(const ProofStructure& g) {
  std::vector<Redex> out;
  for (NodeId c : g.nodes_of_kind(NodeKind::Cut))
    if (auto r = redex_at(g, c))
      out.push_back(*r);
  std::stable_sort(out.begin(), out.end(),
                   [](const Redex& a, const Redex& b) { return min_node(a) < min_node(b); });
  return out;
}

bool redex_present(const ProofStructure& g, const Redex& r) {
  if (!g.has_node(r.cut) || g.node(r.cut).kind != NodeKind::Cut)
    return false;
  auto found = redex_at(g, r.cut);
  return found && *found == r;
}

Reduction reduce(const ProofStructure& g, const Redex& r) {
  if (!redex_present(g, r))
    throw StaleRedex("redex no longer present: " + r.describe());
  Reduction out{g, {}};
  ProofStructure& h = out.result;
  VarMap& m = out.map;
  if (r.kind == RedexKind::A) {
    const Edge& up = g.edge(r.upper);
    std::uint32_t n = static_cast<std::uint32_t>(up.formula.atom_count());
    h.mutable_edge(r.lower).src = up.src;
    h.remove_edge(r.upper);
    h.remove_edge(r.axiom_edge);
    h.remove_node(r.cut);
    h.remove_node(r.axiom);
    m = VarMap::identity(h.variables());
    for (std::uint32_t i = 0; i < n; ++i) {
      m.s[AtomVar{r.upper, i}] = AtomVar{r.lower, i};
      m.s[AtomVar{r.axiom_edge, i}] = AtomVar{r.lower, n - 1 - i};
    }
    return out;
  }
  auto tp = g.premises(r.tensor);
  auto pp = g.premises(r.par);
  EdgeId a = tp[0], b = tp[1], nb = pp[0], na = pp[1];
  PremisePos tside = g.edge(r.tensor_out).pos;
  PremisePos pside = g.edge(r.par_out).pos;
  NodeId outer = r.cut;
  NodeId inner = h.fresh_node_id();
  h.add_node(Node{inner, NodeKind::Cut});
  auto retarget = [&](EdgeId e, NodeId dst, PremisePos pos) {
    Edge& ed = h.mutable_edge(e);
    ed.dst = dst;
    ed.pos = pos;
  };
  retarget(a, outer, tside);
  retarget(na, outer, pside);
  retarget(b, inner, tside);
  retarget(nb, inner, pside);
  h.remove_edge(r.tensor_out);
  h.remove_edge(r.par_out);
  h.remove_node(r.tensor);
  h.remove_node(r.par);
  m = VarMap::identity(h.variables());
  std::uint32_t la = static_cast<std::uint32_t>(g.edge(a).formula.atom_count());
  std::uint32_t lb = static_cast<std::uint32_t>(g.edge(b).formula.atom_count());
  for (std::uint32_t i = 0; i < la + lb; ++i) {
    m.s[AtomVar{r.tensor_out, i}] = i < la ? AtomVar{a, i} : AtomVar{b, i - la};
    m.s[AtomVar{r.par_out, i}] = i < lb ? AtomVar{nb, i} : AtomVar{na, i - lb};
  }
  return out;
}

std::size_t cut_weight(const ProofStructure& g) {
  std::size_t w = 0;
  for (NodeId c : g.nodes_of_kind(NodeKind::Cut)) {
    auto ps = g.premises(c);
    if (!ps.empty())
      w += g.edge(ps[0]).formula.weight();
  }
  return w;
}

NormalizationResult normalize(const ProofStructure& g, const RedexChooser& choose) {
  NormalizationResult res{g, VarMap::identity(g.variables()), {}};
  while (true) {
    auto rs = find_redexes(res.normal);
    if (rs.empty())
      break;
    std::size_t k = choose ? choose(rs) : 0;
    if (k >= rs.size())
      throw Error("redex chooser returned an out-of-range index");
    Reduction red = reduce(res.normal, rs[k]);
    res.map = VarMap::compose(res.map, red.map);
    res.normal = std::move(red.result);
    res.trace.push_back(rs[k]);
  }
  if (res.normal.cut_count() != 0)
    throw StructureError("normalization stuck with " +
                         std::to_string(res.normal.cut_count()) +
                         " cut(s) remaining; the structure is not a proof net");
  return res;
}

NormalizationResult run_steps(const ProofStructure& g, const std::vector<std::size_t>& steps) {
  NormalizationResult res{g, VarMap::identity(g.variables()), {}};
  for (std::size_t step = 0; step < steps.size(); ++step) {
    auto rs = find_redexes(res.normal);
    if (steps[step] >= rs.size())
      throw Error("step " + std::to_string(step) + ": redex index " +
                  std::to_string(steps[step]) + " out of range (" +
                  std::to_string(rs.size()) + " redexes)");
    Reduction red = reduce(res.normal, rs[steps[step]]);
    res.map = VarMap::compose(res.map, red.map);
    res.normal = std::move(red.result);
    res.trace.push_back(rs[steps[step]]);
  }
  return res;
}

std::vector<Outcome> all_normalizations(const ProofStructure& g, std::size_t max_states) {
  std::map<std::string, std::vector<Outcome>> memo;
  std::function<const std::vector<Outcome>&(const ProofStructure&)> go =
      [&](const ProofStructure& h) -> const std::vector<Outcome>& {
    std::string key = node_free_key(h);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    if (memo.size() >= max_states)
      throw Error("all_normalizations: state limit reached");
    std::vector<Outcome> outs;
    auto rs = find_redexes(h);
    if (rs.empty()) {
      if (h.cut_count())
        throw StructureError("normalization stuck");
      outs.push_back(Outcome{h, VarMap::identity(h.variables())});
    }
    for (auto& r : rs) {
      Reduction red = reduce(h, r);
      const auto& sub = go(red.result);
      for (auto& o : sub) {
        Outcome c{o.normal, VarMap::compose(red.map, o.map)};
        bool dup = false;
        for (auto& x : outs)
          if (x.map.t == c.map.t && same_up_to_node_ids(x.normal, c.normal))
            dup = true;
        if (!dup)
          outs.push_back(std::move(c));
      }
    }
    return memo.emplace(key, std::move(outs)).first->second;
  };
  return go(g);
}

ProofStructure eta_expand_axiom(const ProofStructure& g, NodeId ax) {
  if (g.node(ax).kind != NodeKind::Axiom)
    throw StructureError("node " + std::to_string(ax) + " is not an axiom");
  auto cs = g.conclusions(ax);
  if (cs.size() != 2)
    throw StructureError("axiom " + std::to_string(ax) + " does not have two conclusions");
  const Formula& f0 = g.edge(cs[0]).formula;
  if (f0.is_atom())
    return g;
  EdgeId et = f0.kind() == Formula::Kind::Tensor ? cs[0] : cs[1];
  EdgeId ep = et == cs[0] ? cs[1] : cs[0];
  Formula A = g.edge(et).formula.left();
  Formula B = g.edge(et).formula.right();
  ProofStructure h = g;
  NodeId ax2 = h.add_node(NodeKind::Axiom);
  NodeId t = h.add_node(NodeKind::Tensor);
  NodeId p = h.add_node(NodeKind::Par);
  auto edge = [&](NodeId src, NodeId dst, Formula f, PremisePos pos) {
    h.add_edge(Edge{h.fresh_edge_id(), src, dst, std::move(f), pos});
  };
  edge(ax, p, A.negate(), PremisePos::Right);
  edge(ax, t, A, PremisePos::Left);
  edge(ax2, p, B.negate(), PremisePos::Left);
  edge(ax2, t, B, PremisePos::Right);
  h.mutable_edge(et).src = t;
  h.mutable_edge(ep).src = p;
  return h;
}

ProofStructure eta_expand(const ProofStructure& g) {
  ProofStructure h = g;
  while (true) {
    bool changed = false;
    for (NodeId ax : h.nodes_of_kind(NodeKind::Axiom)) {
      auto cs = h.conclusions(ax);
      if (cs.size() == 2 && !h.edge(cs[0]).formula.is_atom()) {
        h = eta_expand_axiom(h, ax);
        changed = true;
        break;
      }
    }
    if (!changed)
      return h;
  }
}

} // namespace pnideal
