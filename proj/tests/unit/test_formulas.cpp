#include "fixtures.hpp"

using namespace pnideal;

TEST_SUITE("formulas") {

TEST_CASE("de morgan") {
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  Formula t = Formula::tensor(a, b);
  CHECK(t.negate() == Formula::par(b.negate(), a.negate()));
  CHECK(t.negate().negate() == t);
  CHECK(parse_formula("~(A*B)") == parse_formula("~B | ~A"));
  CHECK(parse_formula("~(A|B)") == parse_formula("~B * ~A"));
  CHECK(parse_formula("~~A") == a);
}

TEST_CASE("printing and precedence") {
  CHECK(parse_formula("A * B | C").to_string() == "(A * B) | C");
  CHECK(parse_formula("A | B * C").to_string() == "A | (B * C)");
  CHECK(parse_formula("A * B * C").to_string() == "(A * B) * C");
  CHECK(parse_formula("~A").to_string() == "~A");
  CHECK(parse_formula("A ⊗ (B ⅋ ¬C)").to_string() == "A * (B | ~C)");
  for (const char* s : {"A", "~B * (C | A)", "((A | ~A) * B) | ~C", "x1 * y_2"}) {
    Formula f = parse_formula(s);
    CHECK(parse_formula(f.to_string()) == f);
  }
}

TEST_CASE("parse errors") {
  for (const char* s : {"", "A *", "(A", "A)", "* A", "A B", "~", "A | | B"})
    CHECK_THROWS_AS(parse_formula(s), ParseError);
}

TEST_CASE("atom sequences") {
  Formula f = parse_formula("A * ~B | C");
  AtomSeq s = f.atoms();
  REQUIRE(s.size() == 3);
  CHECK(s[0] == OrientedAtom{"A", Sign::Pos});
  CHECK(s[1] == OrientedAtom{"B", Sign::Neg});
  CHECK(s[2] == OrientedAtom{"C", Sign::Pos});
  CHECK(f.negate().atoms() == reverse_dual(s));
  CHECK(reverse_dual(reverse_dual(s)) == s);
  CHECK(f.atom_count() == 3);
}

TEST_CASE("weight") {
  CHECK(parse_formula("A").weight() == 1);
  CHECK(parse_formula("A * B").weight() == 3);
  CHECK(parse_formula("(A * B) | ~C").weight() == 5);
  CHECK(parse_formula("(A * B) | ~C").negate().weight() == 5);
}

}
