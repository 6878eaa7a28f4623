#include "fixtures.hpp"

using namespace pnideal;
using fx::v;

namespace {

Formula A() { return Formula::atom("A"); }

// ax / ax cut: |- ~A, A  and  |- ~A, A  cut on A, ~A
ProofStructure ax_cut_ax() {
  return translate(SequentProof::cut(SequentProof::axiom(A()), SequentProof::axiom(A()), 1, 0));
}

} // namespace

TEST_SUITE("reduction") {

TEST_CASE("a-redex prefers the right premise axiom") {
  ProofStructure g = ax_cut_ax();
  auto rs = find_redexes(g);
  REQUIRE(rs.size() == 1);
  const Redex& r = rs[0];
  CHECK(r.kind == RedexKind::A);
  CHECK(r.axiom == 1);
  CHECK(r.upper == 1);
  CHECK(r.axiom_edge == 2);
  CHECK(r.lower == 3);
  Reduction red = reduce(g, r);
  CHECK(is_proof_structure(red.result));
  CHECK(red.result.nodes().size() == 3);
  CHECK(red.result.edge(3).src == 0);
  CHECK(red.result.cut_count() == 0);
  CHECK(red.map.T(v(0)) == v(0));
  CHECK(red.map.T(v(3)) == v(3));
  CHECK(red.map.S(v(1)) == v(3));
  CHECK(red.map.S(v(2)) == v(3));
  CHECK(red.map.S(v(0)) == v(0));
  CHECK_THROWS_AS(reduce(red.result, r), StaleRedex);
}

TEST_CASE("a-redex on a compound axiom reverses indices") {
  Formula ab = parse_formula("A * B");
  // |- ~B|~A, A*B  cut against an axiom on A*B
  auto p = SequentProof::cut(identity_proof(ab), SequentProof::axiom(ab), 1, 0);
  ProofStructure g = translate(p);
  auto rs = find_redexes(g);
  auto it = std::find_if(rs.begin(), rs.end(), [](const Redex& r) { return r.kind == RedexKind::A; });
  REQUIRE(it != rs.end());
  Reduction red = reduce(g, *it);
  CHECK(is_proof_structure(red.result));
  // axiom_edge carries ~B|~A: position i pairs with lower's n-1-i
  CHECK(red.map.S(AtomVar{it->axiom_edge, 0}) == AtomVar{it->lower, 1});
  CHECK(red.map.S(AtomVar{it->axiom_edge, 1}) == AtomVar{it->lower, 0});
  CHECK(red.map.S(AtomVar{it->upper, 1}) == AtomVar{it->lower, 1});
}

TEST_CASE("m-redex on the detour") {
  ProofStructure g = detour_net();
  auto rs = find_redexes(g);
  REQUIRE(rs.size() == 1);
  const Redex& r = rs[0];
  CHECK(r.kind == RedexKind::M);
  CHECK(r.describe() == "m-redex cut=5 tensor=2 par=4 edges=4,7");
  Reduction red = reduce(g, r);
  const ProofStructure& h = red.result;
  CHECK(is_proof_structure(h));
  CHECK(h.cut_count() == 2);
  CHECK_FALSE(h.has_node(2));
  CHECK_FALSE(h.has_node(4));
  CHECK_FALSE(h.has_edge(4));
  CHECK_FALSE(h.has_edge(7));
  // outer cut keeps its id and the tensor side
  CHECK(h.premises(5) == std::vector<EdgeId>{1, 5});
  CHECK(h.premises(8) == std::vector<EdgeId>{2, 6});
  CHECK(red.map.S(v(4, 0)) == v(1));
  CHECK(red.map.S(v(4, 1)) == v(2));
  CHECK(red.map.S(v(7, 0)) == v(6));
  CHECK(red.map.S(v(7, 1)) == v(5));
  for (auto x : h.variables())
    CHECK(red.map.T(x) == x);
}

TEST_CASE("normalizing the detour") {
  NormalizationResult nf = normalize(detour_net());
  CHECK(nf.trace.size() == 3);
  CHECK(nf.normal.cut_count() == 0);
  CHECK(is_proof_structure(nf.normal));
  CHECK(shape_key(nf.normal) == shape_key(smallest_net()));
  auto x = fx::detour_x();
  std::set<AtomVar> image;
  for (auto y : nf.normal.variables())
    image.insert(nf.map.T(y));
  CHECK(image == std::set<AtomVar>{x[1], x[2], x[11], x[12]});
  CHECK(cut_weight(detour_net()) == 3);
  CHECK(cut_weight(nf.normal) == 0);
}

TEST_CASE("all reduction orders agree") {
  auto outs = all_normalizations(detour_net());
  CHECK(outs.size() == 1);
  auto outs2 = all_normalizations(translate(SequentProof::cut(
      SequentProof::cut(SequentProof::axiom(A()), SequentProof::axiom(A()), 1, 0),
      SequentProof::axiom(A()), 1, 0)));
  CHECK(outs2.size() == 1);
}

TEST_CASE("run_steps and composition") {
  ProofStructure g = detour_net();
  auto seq = run_steps(g, {0, 0});
  CHECK(seq.trace.size() == 2);
  CHECK_THROWS(run_steps(g, {3}));
  for (auto y : seq.normal.variables())
    CHECK(seq.map.S(seq.map.T(y)) == y);
}

TEST_CASE("eta expansion") {
  ProofStructure atomic = detour_net();
  CHECK(node_free_key(eta_expand(atomic)) == node_free_key(atomic));
  Formula f = parse_formula("(A * ~B) | C");
  ProofStructure g = translate(SequentProof::par(SequentProof::axiom(f), 0, 1));
  ProofStructure e = eta_expand(g);
  CHECK(is_proof_structure(e));
  CHECK(e.nodes_of_kind(NodeKind::Axiom).size() == 3);
  for (NodeId ax : e.nodes_of_kind(NodeKind::Axiom))
    for (EdgeId c : e.conclusions(ax))
      CHECK(e.edge(c).formula.is_atom());
  CHECK(e.conclusion_edges() == g.conclusion_edges());
  // single increx on A*B keeps the axiom id for the A part
  ProofStructure s = translate(SequentProof::par(SequentProof::axiom(parse_formula("A * B")), 0, 1));
  ProofStructure s1 = eta_expand_axiom(s, 0);
  CHECK(s1.has_node(0));
  CHECK(s1.nodes_of_kind(NodeKind::Axiom).size() == 2);
  CHECK(s1.nodes_of_kind(NodeKind::Tensor).size() == 1);
  CHECK(s1.nodes_of_kind(NodeKind::Par).size() == 2);
}

}
