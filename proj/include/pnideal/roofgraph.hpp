#pragma once

#include "pnideal/polynomial.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pnideal {

struct GraphEdge {
  AtomVar source; // lower end
  AtomVar target; // higher end
  bool live = true;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// a <-graph: vertices carry an x-position (their index in `vertices`) and a
// height (their rank in `order`); edges point upwards
class OrderedGraph {
public:
  OrderedGraph() = default;
  OrderedGraph(std::vector<AtomVar> vertices, VarOrder order);

  const std::vector<AtomVar>& vertices() const { return vertices_; }
  const VarOrder& order() const { return order_; }
  // insertion order
  const std::vector<GraphEdge>& edges() const { return edges_; }

  std::size_t position(AtomVar v) const;
  std::size_t height(AtomVar v) const { return order_.rank(v); }

  // orients {a,b} upwards; returns the index of the edge
  std::size_t add_edge(AtomVar a, AtomVar b, bool live = true);
  std::optional<std::size_t> find_edge(AtomVar a, AtomVar b) const;
  void set_live(std::size_t i, bool live) { edges_.at(i).live = live; }
  void remove_edge(std::size_t i);

  std::vector<GraphEdge> sorted_edges() const;
  std::size_t valence(AtomVar v, bool live_only) const;
  bool is_linear(bool live_only = false) const;

private:
  std::vector<AtomVar> vertices_;
  VarOrder order_;
  std::vector<GraphEdge> edges_;
};

struct Roof {
  GraphEdge first;  // lower source
  GraphEdge second;
  AtomVar tip() const { return first.target; }
};

// (target, source) lexicographic by height
std::strong_ordering edge_order(const GraphEdge& a, const GraphEdge& b, const VarOrder& o);

OrderedGraph graph_from_relation(const std::vector<AtomVar>& vars, const VarOrder& o,
                                 const std::vector<std::pair<AtomVar, AtomVar>>& sim);

std::vector<Roof> live_roofs(const OrderedGraph& g);
std::optional<Roof> first_live_roof(const OrderedGraph& g);

enum class RoofEvent { Start, RoofOpened, Shortcut, PassDone, Finished };
using RoofObserver = std::function<void(RoofEvent, const OrderedGraph&)>;

struct FallingRoofsOptions {
  std::size_t max_passes = 1'000'000;
  RoofObserver observer;
};

OrderedGraph falling_roofs(const OrderedGraph& s, const FallingRoofsOptions& opts = {});
OrderedGraph live_subgraph(const OrderedGraph& n);

// V - U for every edge U -> V, in edge order
std::vector<Polynomial> graph_generators(const OrderedGraph& g);
// same, in insertion order
std::vector<Polynomial> graph_generators_inserted(const OrderedGraph& g);
std::vector<Polynomial> cut_top(const OrderedGraph& n, const std::set<AtomVar>& low);

std::string to_dot(const OrderedGraph& g, const std::string& name = "N",
                   const std::function<std::string(AtomVar)>& label = {});

} // namespace pnideal
