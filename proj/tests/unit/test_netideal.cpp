#include "fixtures.hpp"

using namespace pnideal;
using fx::diff;
using fx::v;

TEST_SUITE("netideal") {

TEST_CASE("smallest net generators") {
  ProofStructure g = smallest_net();
  // X = x1_0 (A), X' = x0_0 (~A), X'' X''' the atoms of ~A|A
  AtomVar X = v(1), X1 = v(0), X2 = v(2, 0), X3 = v(2, 1);
  auto gs = link_generators(g);
  REQUIRE(gs.items.size() == 3);
  CHECK(gs.items[0].binomial == diff(X, X1));
  CHECK(gs.items[0].link == 0);
  CHECK(gs.items[1].binomial == diff(X1, X2));
  CHECK(gs.items[2].binomial == diff(X, X3));
  auto paths = persistent_paths(g);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == std::vector<AtomVar>{X2, X1, X, X3});
  BoundaryData b = boundary(g);
  CHECK(b.U == std::vector<AtomVar>{X3});
  CHECK(b.V == std::vector<AtomVar>{X2});
  CHECK(b.sigma == std::vector<std::size_t>{0});
  CHECK(b.generators() == std::vector<Polynomial>{diff(X3, X2)});
}

TEST_CASE("detour persistent path and boundary") {
  auto x = fx::detour_x();
  ProofStructure g = detour_net();
  CHECK(fx::strs(std::vector<AtomVar>(x.begin() + 1, x.end())) ==
        std::vector<std::string>{"x8_0", "x0_0", "x1_0", "x4_0", "x7_1", "x5_0", "x6_0",
                                 "x7_0", "x4_1", "x2_0", "x3_0", "x8_1"});
  BoundaryData b = boundary(g);
  CHECK(b.U == std::vector<AtomVar>{x[12]});
  CHECK(b.V == std::vector<AtomVar>{x[1]});
  CHECK(b.sigma == std::vector<std::size_t>{0});
  SimRelation sim = sim_relation(g);
  CHECK(sim.size() == 11);
  for (int i = 1; i < 12; ++i) {
    auto p = std::minmax(x[i], x[i + 1]);
    CHECK(std::find(sim.begin(), sim.end(), std::make_pair(p.first, p.second)) != sim.end());
  }
}

TEST_CASE("order zero") {
  auto x = fx::detour_x();
  CHECK(order_zero(detour_net()).variables() ==
        std::vector<AtomVar>(x.begin() + 1, x.end()));
}

TEST_CASE("order gamma and the generator sequence for one m-step") {
  auto x = fx::detour_x();
  ProofStructure g = detour_net();
  Reduction red = reduce(g, find_redexes(g)[0]);
  NormalizationResult seq{red.result, red.map, {find_redexes(g)[0]}};
  VarOrder o = order_gamma(g, seq);
  CHECK(o.variables() == std::vector<AtomVar>{x[1], x[2], x[3], x[6], x[7], x[10], x[11],
                                              x[12], x[4], x[5], x[8], x[9]});
  auto G = generator_sequence(g, o);
  CHECK(G == std::vector<Polynomial>{diff(x[2], x[1]), diff(x[3], x[2]), diff(x[7], x[6]),
                                     diff(x[11], x[10]), diff(x[12], x[11]), diff(x[4], x[3]),
                                     diff(x[5], x[6]), diff(x[5], x[4]), diff(x[8], x[7]),
                                     diff(x[9], x[10]), diff(x[9], x[8])});
  CHECK_THROWS_AS(order_gamma(g, std::set<AtomVar>(x.begin() + 1, x.end())), OrderError);
}

TEST_CASE("order n on the detour") {
  auto x = fx::detour_x();
  ProofStructure g = detour_net();
  VarOrder o = order_n(g);
  CHECK(o.variables() == std::vector<AtomVar>{x[2], x[1], x[11], x[12], x[10], x[9], x[8],
                                              x[7], x[6], x[5], x[4], x[3]});
  for (int i = 1; i <= 12; ++i)
    CHECK(above_conclusion(g, x[i]) == (i <= 2 || i >= 11));
  auto G = generator_sequence(g, o);
  std::set<std::string> got;
  for (auto& p : canonical_set(G, o))
    got.insert(p.to_string(o));
  std::set<std::string> want;
  std::vector<std::pair<int, int>> edges{{9, 8}, {5, 4}, {11, 12}, {11, 10}, {10, 9}, {8, 7},
                                         {7, 6}, {6, 5}, {4, 3}, {2, 3}, {2, 1}};
  std::vector<Polynomial> wp;
  for (auto [a, b] : edges)
    wp.push_back(diff(x[b], x[a]));
  for (auto& p : canonical_set(wp, o))
    want.insert(p.to_string(o));
  CHECK(got == want);
  // cut-free: order n is order zero
  ProofStructure s = smallest_net();
  CHECK(order_n(s).variables() == order_zero(s).variables());
}

TEST_CASE("G0 is a minimal groebner basis") {
  ProofStructure g = detour_net();
  VarOrder o = order_zero(g);
  Basis B{generator_sequence(g, o), o};
  CHECK(is_groebner(B));
  CHECK(is_minimal(B));
  std::set<std::string> lms;
  for (auto& p : B.polys)
    lms.insert(leading_monomial(p, o).to_string());
  CHECK(lms.size() == B.polys.size());
}

TEST_CASE("generator sequences agree with G_pi up to sign") {
  ProofStructure g = detour_net();
  VarOrder o = order_zero(g);
  auto G = generator_sequence(g, o);
  auto L = link_generators(g).polynomials();
  CHECK(canonical_set(G, o) == canonical_set(L, o));
  CHECK(G.size() == L.size());
}

TEST_CASE("combining conclusions") {
  ProofStructure body = translate(detour_body_proof());
  CHECK(body.conclusion_nodes().size() == 2);
  ProofStructure c = combine_conclusions(body);
  CHECK(c.conclusion_nodes().size() == 1);
  CHECK(is_proof_structure(c));
  CHECK(c.edge(c.conclusion_edges()[0]).formula.to_string() == "~A | A");
  CHECK_THROWS(combine_conclusions(c));
}

TEST_CASE("restriction and variable sets") {
  ProofStructure g = smallest_net();
  auto vs = variable_set(g);
  CHECK(vs.size() == 4);
  std::vector<Polynomial> F{diff(v(1), v(0)), diff(v(2, 1), v(1))};
  CHECK(restrict_to(F, {v(0), v(1)}) == std::vector<Polynomial>{diff(v(1), v(0))});
}

TEST_CASE("sabotage swaps one axiom pairing") {
  ProofStructure g = detour_net();
  auto good = link_generators(g).polynomials();
  auto bad = link_generators(g, IdealOptions{true}).polynomials();
  REQUIRE(good.size() == bad.size());
  std::size_t changed = 0;
  for (std::size_t i = 0; i < good.size(); ++i)
    changed += good[i] != bad[i];
  CHECK(changed == 2);
}

TEST_CASE("persistent paths reject structures without boundary") {
  // ax-cut loop: ax conclusions feed the same cut
  ProofStructure g;
  g.add_node(Node{0, NodeKind::Axiom});
  g.add_node(Node{1, NodeKind::Cut});
  g.add_edge(Edge{0, 0, 1, Formula::atom("A", Sign::Neg), PremisePos::Right});
  g.add_edge(Edge{1, 0, 1, Formula::atom("A"), PremisePos::Left});
  CHECK(is_proof_structure(g));
  CHECK_THROWS(persistent_paths(g));
  CHECK(find_redexes(g).empty());
}

}
