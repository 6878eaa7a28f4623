#include "fixtures.hpp"

using namespace pnideal;

TEST_SUITE("verify") {

TEST_CASE("identity proofs") {
  for (const char* s : {"A", "A * B", "A | ~B", "(A * B) | (~C * A)", "~(A | (B * C))"}) {
    Formula f = parse_formula(s);
    auto seq = end_sequent(identity_proof(f));
    REQUIRE(seq.size() == 2);
    bool ok = (seq[0] == f.negate() && seq[1] == f) || (seq[0] == f && seq[1] == f.negate());
    CHECK_MESSAGE(ok, s);
    ProofStructure g = translate(identity_proof(f));
    CHECK(is_proof_structure(g));
    for (NodeId ax : g.nodes_of_kind(NodeKind::Axiom))
      CHECK(g.edge(g.conclusions(ax)[0]).formula.is_atom());
    CHECK(identity_proof(f).rule_count() == 3 * f.atom_count() - 2);
  }
}

TEST_CASE("checkers on the named nets") {
  for (auto& n : named_nets()) {
    for (Suite s : all_suites())
      for (auto& r : run_suite(s, n, 3)) {
        CHECK_MESSAGE(r.pass, to_line(r));
        CHECK(r.net == n.name);
      }
  }
  ProofStructure d = detour_net();
  auto r = check_elimination_theorem(d, std::vector<std::size_t>{0});
  CHECK(r.pass);
  CHECK_FALSE(r.vacuous);
  CHECK(check_execution_theorem(d).pass);
  CHECK(check_ideal_intersection(d, find_redexes(d)[0]).pass);
  CHECK(check_ts_identities(d, find_redexes(d)[0]).pass);
}

TEST_CASE("cut-free nets give vacuous reports") {
  NamedNet n{"smallest", smallest_net()};
  auto rs = run_suite(Suite::Intersection, n, 0);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].pass);
  CHECK(rs[0].vacuous);
  CHECK(to_line(rs[0]) == "PASS intersection smallest (vacuous)");
  CHECK(to_json(rs[0]).dump() ==
        R"({"theorem":"intersection","net":"smallest","pass":true,"vacuous":true})");
}

TEST_CASE("goi permutation") {
  CHECK(goi_permutation(smallest_net()) == std::vector<std::size_t>{1, 0});
  CHECK(boundary_involution(smallest_net()) == std::vector<std::size_t>{1, 0});
  CHECK(goi_permutation(detour_net()) == std::vector<std::size_t>{1, 0});
  ProofStructure g =
      translate(SequentProof::par(SequentProof::axiom(parse_formula("A * ~B")), 0, 1));
  // ~A * ... conclusion (B | ~A) | (A * ~B): positions 0..3
  CHECK(goi_permutation(g) == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(check_goi(g).pass);
}

TEST_CASE("sabotage yields witnesses") {
  CheckOptions bad;
  bad.ideal.sabotage = true;
  auto r = check_goi(detour_net(), bad);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->empty());
}

TEST_CASE("random nets are deterministic") {
  CHECK(to_json(random_net(11, 12)) == to_json(random_net(11, 12)));
  auto a = random_corpus(5, 10), b = random_corpus(5, 10);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(node_free_key(a[i].net) == node_free_key(b[i].net));
    CHECK(a[i].net.conclusion_nodes().size() == 1);
    CHECK(a[i].net.cut_count() >= 1);
    CHECK(a[i].net.cut_count() <= 8);
    CHECK(a[i].net.variables().size() <= 40);
    CHECK(is_proof_structure(a[i].net));
  }
}

TEST_CASE("suite names") {
  for (Suite s : all_suites())
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("nope"));
}

}
