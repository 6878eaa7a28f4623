#include "pnideal/sequent.hpp"

#include "pnideal/error.hpp"

namespace pnideal {

std::string to_string(Rule r) {
  switch (r) {
  case Rule::Axiom: return "ax";
  case Rule::Cut: return "cut";
  case Rule::Tensor: return "tensor";
  case Rule::Par: return "par";
  }
  return "?";
}

SequentProof SequentProof::axiom(Formula a) {
  SequentProof p;
  p.rule = Rule::Axiom;
  p.formula = std::move(a);
  return p;
}

SequentProof SequentProof::tensor(SequentProof l, SequentProof r, std::size_t i,
                                  std::size_t j) {
  SequentProof p;
  p.rule = Rule::Tensor;
  p.children = {std::move(l), std::move(r)};
  p.occ = {i, j};
  return p;
}

SequentProof SequentProof::par(SequentProof q, std::size_t i, std::size_t j) {
  SequentProof p;
  p.rule = Rule::Par;
  p.children = {std::move(q)};
  p.occ = {i, j};
  return p;
}

SequentProof SequentProof::cut(SequentProof l, SequentProof r, std::size_t i,
                               std::size_t j) {
  SequentProof p;
  p.rule = Rule::Cut;
  p.children = {std::move(l), std::move(r)};
  p.occ = {i, j};
  return p;
}

std::size_t SequentProof::rule_count() const {
  std::size_t n = 1;
  for (auto& c : children)
    n += c.rule_count();
  return n;
}

std::size_t SequentProof::cut_count() const {
  std::size_t n = rule == Rule::Cut ? 1 : 0;
  for (auto& c : children)
    n += c.cut_count();
  return n;
}

namespace {

struct Occurrence {
  Formula formula;
  EdgeId edge;
};

struct Translator {
  ProofStructure g;
  bool build = true;

  EdgeId new_edge(NodeId src, const Formula& f) {
    EdgeId id = g.fresh_edge_id();
    if (build)
      g.add_edge(Edge{id, src, -1, f, PremisePos::Only});
    return id;
  }

  void attach(EdgeId e, NodeId dst, PremisePos pos) {
    if (!build)
      return;
    Edge& ed = g.mutable_edge(e);
    ed.dst = dst;
    ed.pos = pos;
  }

  std::vector<Occurrence> run(const SequentProof& p, const std::string& path) {
    auto fail = [&](const std::string& msg) -> TranslationError {
      return TranslationError(path.empty() ? to_string(p.rule) : path + "/" + to_string(p.rule),
                              msg);
    };
    auto want_children = [&](std::size_t n) {
      if (p.children.size() != n)
        throw fail("expected " + std::to_string(n) + " subproof(s), found " +
                   std::to_string(p.children.size()));
    };
    auto want_occ = [&](std::size_t n) {
      if (p.occ.size() != n)
        throw fail("expected " + std::to_string(n) + " occurrence index(es), found " +
                   std::to_string(p.occ.size()));
    };
    auto child_path = [&](std::size_t k) {
      std::string here = path.empty() ? to_string(p.rule) : path + "/" + to_string(p.rule);
      return here + "[" + std::to_string(k) + "]";
    };
    auto check_index = [&](const std::vector<Occurrence>& s, std::size_t i) {
      if (i >= s.size())
        throw fail("occurrence " + std::to_string(i) + " out of range (sequent has " +
                   std::to_string(s.size()) + ")");
    };

    switch (p.rule) {
    case Rule::Axiom: {
      want_children(0);
      if (!p.occ.empty())
        throw fail("axiom takes no occurrence indices");
      if (!p.formula)
        throw fail("axiom without a formula");
      NodeId ax = g.fresh_node_id();
      if (build)
        g.add_node(Node{ax, NodeKind::Axiom});
      Formula neg = p.formula->negate();
      EdgeId e1 = new_edge(ax, neg);
      EdgeId e2 = new_edge(ax, *p.formula);
      return {{neg, e1}, {*p.formula, e2}};
    }
    case Rule::Par: {
      want_children(1);
      want_occ(2);
      if (p.formula)
        throw fail("only axioms carry a formula");
      auto s = run(p.children[0], child_path(0));
      std::size_t i = p.occ[0], j = p.occ[1];
      check_index(s, i);
      check_index(s, j);
      if (i == j)
        throw fail("par needs two distinct occurrences");
      NodeId n = g.fresh_node_id();
      if (build)
        g.add_node(Node{n, NodeKind::Par});
      attach(s[i].edge, n, PremisePos::Left);
      attach(s[j].edge, n, PremisePos::Right);
      Formula f = Formula::par(s[i].formula, s[j].formula);
      EdgeId e = new_edge(n, f);
      std::vector<Occurrence> out;
      std::size_t at = std::min(i, j);
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k == at)
          out.push_back({f, e});
        if (k != i && k != j)
          out.push_back(s[k]);
      }
      return out;
    }
    case Rule::Tensor:
    case Rule::Cut: {
      want_children(2);
      want_occ(2);
      if (p.formula)
        throw fail("only axioms carry a formula");
      auto l = run(p.children[0], child_path(0));
      auto r = run(p.children[1], child_path(1));
      std::size_t i = p.occ[0], j = p.occ[1];
      check_index(l, i);
      check_index(r, j);
      bool cut = p.rule == Rule::Cut;
      if (cut && !(r[j].formula == l[i].formula.negate()))
        throw fail("cut formulas " + l[i].formula.to_string() + " and " +
                   r[j].formula.to_string() + " are not dual");
      NodeId n = g.fresh_node_id();
      if (build)
        g.add_node(Node{n, cut ? NodeKind::Cut : NodeKind::Tensor});
      attach(l[i].edge, n, PremisePos::Left);
      attach(r[j].edge, n, PremisePos::Right);
      std::vector<Occurrence> out;
      for (std::size_t k = 0; k < l.size(); ++k)
        if (k != i)
          out.push_back(l[k]);
      if (!cut) {
        Formula f = Formula::tensor(l[i].formula, r[j].formula);
        out.push_back({f, new_edge(n, f)});
      }
      for (std::size_t k = 0; k < r.size(); ++k)
        if (k != j)
          out.push_back(r[k]);
      return out;
    }
    }
    throw fail("unknown rule");
  }
};

} // namespace

std::vector<Formula> end_sequent(const SequentProof& p) {
  Translator t;
  t.build = false;
  std::vector<Formula> out;
  for (auto& o : t.run(p, ""))
    out.push_back(o.formula);
  return out;
}

ProofStructure translate(const SequentProof& p) {
  Translator t;
  auto seq = t.run(p, "");
  for (auto& o : seq) {
    NodeId c = t.g.fresh_node_id();
    t.g.add_node(Node{c, NodeKind::Conclusion});
    t.attach(o.edge, c, PremisePos::Only);
  }
  return std::move(t.g);
}

} // namespace pnideal
