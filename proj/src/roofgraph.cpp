#include "pnideal/roofgraph.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pnideal {

OrderedGraph::OrderedGraph(std::vector<AtomVar> vertices, VarOrder order)
    : vertices_(std::move(vertices)), order_(std::move(order)) {
  for (auto v : vertices_)
    order_.rank(v);
}

std::size_t OrderedGraph::position(AtomVar v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end())
    throw GraphError("vertex " + to_string(v) + " not in graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t OrderedGraph::add_edge(AtomVar a, AtomVar b, bool live) {
  std::size_t ra = order_.rank(a), rb = order_.rank(b);
  if (ra == rb)
    throw GraphError("edge between a vertex and itself: " + to_string(a));
  if (ra > rb)
    std::swap(a, b);
  if (find_edge(a, b))
    throw GraphError("duplicate edge " + to_string(a) + " -> " + to_string(b));
  edges_.push_back(GraphEdge{a, b, live});
  return edges_.size() - 1;
}

std::optional<std::size_t> OrderedGraph::find_edge(AtomVar a, AtomVar b) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if ((e.source == a && e.target == b) || (e.source == b && e.target == a))
      return i;
  }
  return std::nullopt;
}

void OrderedGraph::remove_edge(std::size_t i) {
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(i));
}

std::vector<GraphEdge> OrderedGraph::sorted_edges() const {
  auto out = edges_;
  std::sort(out.begin(), out.end(), [&](const GraphEdge& a, const GraphEdge& b) {
    return edge_order(a, b, order_) < 0;
  });
  return out;
}

std::size_t OrderedGraph::valence(AtomVar v, bool live_only) const {
  std::size_t n = 0;
  for (auto& e : edges_)
    if ((!live_only || e.live) && (e.source == v || e.target == v))
      ++n;
  return n;
}

bool OrderedGraph::is_linear(bool live_only) const {
  std::map<AtomVar, std::size_t> val;
  for (auto& e : edges_) {
    if (live_only && !e.live)
      continue;
    if (++val[e.source] > 2 || ++val[e.target] > 2)
      return false;
  }
  return true;
}

std::strong_ordering edge_order(const GraphEdge& a, const GraphEdge& b, const VarOrder& o) {
  if (auto c = o.rank(a.target) <=> o.rank(b.target); c != 0)
    return c;
  return o.rank(a.source) <=> o.rank(b.source);
}

OrderedGraph graph_from_relation(const std::vector<AtomVar>& vars, const VarOrder& o,
                                 const std::vector<std::pair<AtomVar, AtomVar>>& sim) {
  OrderedGraph g(vars, o);
  std::set<AtomVar> vs(vars.begin(), vars.end());
  for (auto [a, b] : sim) {
    if (!vs.count(a) || !vs.count(b))
      throw GraphError("relation mentions a variable outside the vertex set");
    if (o.rank(a) == o.rank(b))
      throw GraphError("relation pair of equal rank at " + to_string(a));
    if (!g.find_edge(a, b))
      g.add_edge(a, b);
  }
  return g;
}

std::vector<Roof> live_roofs(const OrderedGraph& g) {
  const VarOrder& o = g.order();
  std::map<std::size_t, std::vector<GraphEdge>> by_tip;
  for (auto& e : g.edges())
    if (e.live)
      by_tip[o.rank(e.target)].push_back(e);
  std::vector<Roof> out;
  for (auto& [tip, es] : by_tip) {
    std::sort(es.begin(), es.end(), [&](const GraphEdge& a, const GraphEdge& b) {
      return o.rank(a.source) < o.rank(b.source);
    });
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        out.push_back(Roof{es[i], es[j]});
  }
  std::sort(out.begin(), out.end(), [&](const Roof& a, const Roof& b) {
    if (auto c = edge_order(a.first, b.first, o); c != 0)
      return c < 0;
    return edge_order(a.second, b.second, o) < 0;
  });
  return out;
}

std::optional<Roof> first_live_roof(const OrderedGraph& g) {
  auto rs = live_roofs(g);
  if (rs.empty())
    return std::nullopt;
  return rs.front();
}

namespace {

// a live roof containing edge i other than through itself, as (other edge,
// whether i is the lower-source member)
std::optional<std::pair<std::size_t, bool>> live_roof_partner(const OrderedGraph& g,
                                                              std::size_t i) {
  const auto& d = g.edges()[i];
  if (!d.live)
    return std::nullopt;
  const VarOrder& o = g.order();
  std::optional<std::pair<std::size_t, bool>> best;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (k == i || !e.live || e.target != d.target)
      continue;
    bool d_first = o.rank(d.source) < o.rank(e.source);
    if (!best || edge_order(e, g.edges()[best->first], o) < 0)
      best = std::make_pair(k, d_first);
  }
  return best;
}

} // namespace

OrderedGraph falling_roofs(const OrderedGraph& s, const FallingRoofsOptions& opts) {
  if (!s.is_linear())
    throw GraphError("falling_roofs: input graph is not linear");
  for (auto& e : s.edges())
    if (!e.live)
      throw GraphError("falling_roofs: input has dead edges");
  OrderedGraph n = s;
  auto notify = [&](RoofEvent ev) {
    if (opts.observer)
      opts.observer(ev, n);
  };
  notify(RoofEvent::Start);
  std::size_t passes = 0;
  while (auto roof = first_live_roof(n)) {
    if (++passes > opts.max_passes)
      throw GraphError("falling_roofs: pass ceiling reached");
    n.set_live(*n.find_edge(roof->first.source, roof->first.target), false);
    n.set_live(*n.find_edge(roof->second.source, roof->second.target), false);
    AtomVar lo = roof->first.source, hi = roof->second.source;
    std::size_t d;
    bool fresh = false;
    if (auto ex = n.find_edge(lo, hi)) {
      d = *ex;
    } else {
      d = n.add_edge(lo, hi);
      fresh = true;
    }
    notify(RoofEvent::RoofOpened);
    while (auto partner = live_roof_partner(n, d)) {
      if (!fresh)
        throw GraphError("falling_roofs: pre-existing edge " +
                         to_string(n.edges()[d].source) + " -> " +
                         to_string(n.edges()[d].target) + " lies in a live roof");
      auto [k, d_first] = *partner;
      GraphEdge de = n.edges()[d];
      GraphEdge ee = n.edges()[k];
      n.set_live(k, false);
      AtomVar a = d_first ? de.source : ee.source;
      AtomVar b = d_first ? ee.source : de.source;
      n.remove_edge(d);
      if (auto ex = n.find_edge(a, b)) {
        d = *ex;
        fresh = false;
      } else {
        d = n.add_edge(a, b);
        fresh = true;
      }
      notify(RoofEvent::Shortcut);
    }
    notify(RoofEvent::PassDone);
  }
  notify(RoofEvent::Finished);
  return n;
}

OrderedGraph live_subgraph(const OrderedGraph& n) {
  OrderedGraph out(n.vertices(), n.order());
  for (auto& e : n.edges())
    if (e.live)
      out.add_edge(e.source, e.target);
  return out;
}

std::vector<Polynomial> graph_generators(const OrderedGraph& g) {
  std::vector<Polynomial> out;
  for (auto& e : g.sorted_edges())
    out.push_back(Polynomial::difference(e.target, e.source));
  return out;
}

std::vector<Polynomial> graph_generators_inserted(const OrderedGraph& g) {
  std::vector<Polynomial> out;
  for (auto& e : g.edges())
    out.push_back(Polynomial::difference(e.target, e.source));
  return out;
}

std::vector<Polynomial> cut_top(const OrderedGraph& n, const std::set<AtomVar>& low) {
  const VarOrder& o = n.order();
  std::size_t max_low = 0;
  for (auto v : low)
    max_low = std::max(max_low, o.rank(v) + 1);
  if (max_low != low.size())
    throw GraphError("cut_top: low set is not downward closed");
  std::vector<Polynomial> out;
  for (auto& e : n.sorted_edges())
    if (low.count(e.source) && low.count(e.target))
      out.push_back(Polynomial::difference(e.target, e.source));
  return out;
}

std::string to_dot(const OrderedGraph& g, const std::string& name,
                   const std::function<std::string(AtomVar)>& label) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    AtomVar v = g.vertices()[i];
    std::string l = label ? label(v) : to_string(v);
    os << "  \"" << to_string(v) << "\" [label=\"" << l << "\", pos=\"" << i << ","
       << g.height(v) << "!\"];\n";
  }
  for (auto& e : g.edges()) {
    os << "  \"" << to_string(e.source) << "\" -> \"" << to_string(e.target) << "\"";
    if (!e.live)
      os << " [style=dotted]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace pnideal
