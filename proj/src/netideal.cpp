#include "pnideal/netideal.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <map>

namespace pnideal {

std::vector<Polynomial> GeneratorSet::polynomials() const {
  std::vector<Polynomial> out;
  for (auto& g : items)
    out.push_back(g.binomial);
  return out;
}

std::vector<Polynomial> BoundaryData::generators() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < U.size(); ++i)
    out.push_back(Polynomial::difference(U[i], V[sigma[i]]));
  return out;
}

GeneratorSet link_generators(const ProofStructure& g, const IdealOptions& opts) {
  GeneratorSet gs;
  auto add = [&](NodeId link, AtomVar plus, AtomVar minus) {
    gs.items.push_back(Generator{Polynomial::difference(plus, minus), link, plus, minus});
  };
  auto count = [&](EdgeId e) {
    return static_cast<std::uint32_t>(g.edge(e).formula.atom_count());
  };
  for (auto& [id, n] : g.nodes()) {
    switch (n.kind) {
    case NodeKind::Axiom: {
      auto cs = g.conclusions(id);
      if (cs.size() != 2)
        throw StructureError("axiom " + std::to_string(id) + " needs two conclusions");
      std::uint32_t k = count(cs[0]);
      for (std::uint32_t i = 0; i < k; ++i)
        add(id, AtomVar{cs[1], i}, AtomVar{cs[0], k - 1 - i});
      break;
    }
    case NodeKind::Cut: {
      auto ps = g.premises(id);
      if (ps.size() != 2)
        throw StructureError("cut " + std::to_string(id) + " needs two premises");
      std::uint32_t k = count(ps[0]);
      for (std::uint32_t i = 0; i < k; ++i)
        add(id, AtomVar{ps[0], i}, AtomVar{ps[1], k - 1 - i});
      break;
    }
    case NodeKind::Tensor:
    case NodeKind::Par: {
      auto ps = g.premises(id);
      auto cs = g.conclusions(id);
      if (ps.size() != 2 || cs.size() != 1)
        throw StructureError(to_string(n.kind) + " " + std::to_string(id) +
                             " needs two premises and one conclusion");
      std::uint32_t ka = count(ps[0]), kb = count(ps[1]);
      for (std::uint32_t i = 0; i < ka; ++i)
        add(id, AtomVar{ps[0], i}, AtomVar{cs[0], i});
      for (std::uint32_t j = 0; j < kb; ++j)
        add(id, AtomVar{ps[1], j}, AtomVar{cs[0], ka + j});
      break;
    }
    case NodeKind::Conclusion:
      break;
    }
  }
  if (opts.sabotage) {
    auto axioms = g.nodes_of_kind(NodeKind::Axiom);
    auto first_of = [&](NodeId link) {
      for (std::size_t i = 0; i < gs.items.size(); ++i)
        if (gs.items[i].link == link)
          return i;
      return gs.items.size();
    };
    auto swap_minus = [&](std::size_t a, std::size_t b) {
      Generator& ga = gs.items[a];
      Generator& gb = gs.items[b];
      std::swap(ga.minus, gb.minus);
      ga.binomial = Polynomial::difference(ga.plus, ga.minus);
      gb.binomial = Polynomial::difference(gb.plus, gb.minus);
    };
    if (axioms.size() >= 2) {
      swap_minus(first_of(axioms[0]), first_of(axioms[1]));
    } else if (!axioms.empty()) {
      auto cs = g.conclusions(axioms[0]);
      if (count(cs[0]) >= 2) {
        std::size_t a = first_of(axioms[0]);
        swap_minus(a, a + 1);
      }
    }
  }
  return gs;
}

SimRelation sim_relation(const ProofStructure& g, const IdealOptions& opts) {
  SimRelation out;
  for (auto& gen : link_generators(g, opts).items)
    out.emplace_back(std::min(gen.plus, gen.minus), std::max(gen.plus, gen.minus));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

EdgeId single_conclusion(const ProofStructure& g) {
  auto cs = g.conclusion_edges();
  if (cs.size() != 1)
    throw StructureError("expected a single conclusion, found " + std::to_string(cs.size()) +
                         "; combine the conclusions first (combine_conclusions / --combine)");
  return cs[0];
}

} // namespace

std::vector<PersistentPath> persistent_paths(const ProofStructure& g, const IdealOptions& opts) {
  EdgeId ce = single_conclusion(g);
  AtomSeq atoms = g.edge(ce).formula.atoms();
  std::map<AtomVar, std::vector<AtomVar>> adj;
  for (auto v : g.variables())
    adj[v];
  for (auto [a, b] : sim_relation(g, opts)) {
    if (!adj.count(a) || !adj.count(b))
      throw StructureError("relation mentions an unknown variable");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, ns] : adj)
    if (ns.size() > 2)
      throw StructureError("variable " + to_string(v) + " has " + std::to_string(ns.size()) +
                           " neighbours; the classes are not paths");
  std::vector<PersistentPath> paths;
  std::set<AtomVar> seen;
  for (std::uint32_t q = 0; q < atoms.size(); ++q) {
    if (atoms[q].sign != Sign::Pos)
      continue;
    AtomVar start{ce, q};
    if (adj[start].size() != 1)
      throw StructureError("conclusion atom " + to_string(start) + " has " +
                           std::to_string(adj[start].size()) + " neighbours");
    PersistentPath p{start};
    seen.insert(start);
    std::optional<AtomVar> prev;
    AtomVar cur = start;
    while (true) {
      std::optional<AtomVar> next;
      for (auto n : adj[cur])
        if (!prev || n != *prev)
          next = n;
      if (!next)
        break;
      if (seen.count(*next))
        throw StructureError("cycle through " + to_string(*next));
      seen.insert(*next);
      p.push_back(*next);
      prev = cur;
      cur = *next;
    }
    AtomVar end = p.back();
    if (p.size() < 2 || end.edge != ce || atoms[end.index].sign != Sign::Neg)
      throw StructureError("path from positive conclusion atom " + to_string(start) +
                           " ends at " + to_string(end) +
                           ", not at a negative conclusion atom");
    std::reverse(p.begin(), p.end());
    paths.push_back(std::move(p));
  }
  for (auto& [v, ns] : adj)
    if (!seen.count(v))
      throw StructureError("variable " + to_string(v) +
                           " lies in a class without conclusion endpoints");
  return paths;
}

BoundaryData boundary(const ProofStructure& g, const IdealOptions& opts) {
  EdgeId ce = single_conclusion(g);
  AtomSeq atoms = g.edge(ce).formula.atoms();
  BoundaryData b;
  std::map<AtomVar, std::size_t> vpos;
  for (std::uint32_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].sign == Sign::Pos) {
      b.U.push_back(AtomVar{ce, i});
    } else {
      vpos[AtomVar{ce, i}] = b.V.size();
      b.V.push_back(AtomVar{ce, i});
    }
  }
  if (b.U.size() != b.V.size())
    throw StructureError("conclusion has unequal numbers of positive and negative atoms");
  for (auto& p : persistent_paths(g, opts))
    b.sigma.push_back(vpos.at(p.front()));
  return b;
}

VarOrder order_zero(const ProofStructure& g, const IdealOptions& opts) {
  std::vector<AtomVar> vs;
  for (auto& p : persistent_paths(g, opts))
    vs.insert(vs.end(), p.begin(), p.end());
  return VarOrder(std::move(vs));
}

VarOrder order_gamma(const ProofStructure& g, const std::set<AtomVar>& survivors,
                     const IdealOptions& opts) {
  auto paths = persistent_paths(g, opts);
  std::vector<AtomVar> low, high;
  for (auto& p : paths)
    for (auto v : p)
      (survivors.count(v) ? low : high).push_back(v);
  if (high.empty())
    throw OrderError("order_gamma: the reduction sequence eliminates no variable");
  low.insert(low.end(), high.begin(), high.end());
  return VarOrder(std::move(low));
}

VarOrder order_gamma(const ProofStructure& g, const NormalizationResult& seq,
                     const IdealOptions& opts) {
  std::set<AtomVar> image;
  for (auto v : seq.normal.variables())
    image.insert(seq.map.T(v));
  return order_gamma(g, image, opts);
}

bool above_conclusion(const ProofStructure& g, AtomVar v) {
  EdgeId e = v.edge;
  for (std::size_t steps = 0; steps <= g.edges().size(); ++steps) {
    const Node& n = g.node(g.edge(e).dst);
    switch (n.kind) {
    case NodeKind::Conclusion:
      return true;
    case NodeKind::Cut:
      return false;
    case NodeKind::Tensor:
    case NodeKind::Par: {
      auto cs = g.conclusions(n.id);
      if (cs.size() != 1)
        throw StructureError("link " + std::to_string(n.id) + " lacks a conclusion");
      e = cs[0];
      break;
    }
    case NodeKind::Axiom:
      throw StructureError("edge " + std::to_string(e) + " points into an axiom");
    }
  }
  throw StructureError("directed cycle starting at " + to_string(v));
}

VarOrder order_n(const ProofStructure& g, const IdealOptions& opts) {
  std::vector<AtomVar> vs;
  for (auto& p : persistent_paths(g, opts)) {
    std::vector<bool> up(p.size());
    std::optional<std::size_t> t1, t2;
    for (std::size_t i = 0; i < p.size(); ++i) {
      up[i] = above_conclusion(g, p[i]);
      if (!up[i]) {
        if (!t1)
          t1 = i;
        t2 = i;
      }
    }
    if (!t1) {
      vs.insert(vs.end(), p.begin(), p.end());
      continue;
    }
    for (std::size_t i = *t1; i <= *t2; ++i)
      if (up[i])
        throw StructureError("atoms above a cut are not contiguous on a persistent path");
    for (std::size_t i = *t1; i-- > 0;)
      vs.push_back(p[i]);
    for (std::size_t i = *t2 + 1; i < p.size(); ++i)
      vs.push_back(p[i]);
    for (std::size_t i = *t2 + 1; i-- > *t1;)
      vs.push_back(p[i]);
  }
  return VarOrder(std::move(vs));
}

OrderedGraph sim_graph(const ProofStructure& g, const VarOrder& o, const IdealOptions& opts) {
  std::vector<AtomVar> layout;
  if (g.conclusion_nodes().size() == 1) {
    for (auto& p : persistent_paths(g, opts))
      layout.insert(layout.end(), p.begin(), p.end());
  } else {
    layout = g.variables();
  }
  return graph_from_relation(layout, o, sim_relation(g, opts));
}

std::vector<Polynomial> generator_sequence(const ProofStructure& g, const VarOrder& o,
                                           const IdealOptions& opts) {
  if (g.variables().empty())
    return {};
  return graph_generators(sim_graph(g, o, opts));
}

ProofStructure combine_conclusions(const ProofStructure& g) {
  auto cnodes = g.conclusion_nodes();
  if (cnodes.size() < 2)
    throw StructureError("combine_conclusions needs at least two conclusions, found " +
                         std::to_string(cnodes.size()));
  auto cedges = g.conclusion_edges();
  ProofStructure h = g;
  for (NodeId c : cnodes)
    h.remove_node(c);
  EdgeId acc = cedges[0];
  for (std::size_t i = 1; i < cedges.size(); ++i) {
    NodeId p = h.add_node(NodeKind::Par);
    Edge& l = h.mutable_edge(acc);
    l.dst = p;
    l.pos = PremisePos::Left;
    Edge& r = h.mutable_edge(cedges[i]);
    r.dst = p;
    r.pos = PremisePos::Right;
    Formula f = Formula::par(h.edge(acc).formula, h.edge(cedges[i]).formula);
    EdgeId e = h.fresh_edge_id();
    h.add_edge(Edge{e, p, -1, f, PremisePos::Only});
    acc = e;
  }
  NodeId c = h.add_node(NodeKind::Conclusion);
  h.mutable_edge(acc).dst = c;
  return h;
}

std::set<AtomVar> variable_set(const ProofStructure& g) {
  auto vs = g.variables();
  return std::set<AtomVar>(vs.begin(), vs.end());
}

std::vector<Polynomial> restrict_to(std::span<const Polynomial> F, const std::set<AtomVar>& vars) {
  std::vector<Polynomial> out;
  for (auto& f : F) {
    bool inside = true;
    for (auto v : f.variables())
      if (!vars.count(v))
        inside = false;
    if (inside)
      out.push_back(f);
  }
  return out;
}

} // namespace pnideal
