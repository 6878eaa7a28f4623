#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pnideal {

enum class Sign { Pos, Neg };

inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }

struct OrientedAtom {
  std::string name;
  Sign sign = Sign::Pos;

  friend bool operator==(const OrientedAtom&, const OrientedAtom&) = default;
  friend auto operator<=>(const OrientedAtom&, const OrientedAtom&) = default;
};

using AtomSeq = std::vector<OrientedAtom>;

// Formulas live in negation normal form, so ~(A*B) is stored as ~B|~A and
// structural equality is equality up to De Morgan.
class Formula {
public:
  enum class Kind { Atom, Tensor, Par };

  static Formula atom(std::string name, Sign sign = Sign::Pos);
  static Formula tensor(Formula a, Formula b);
  static Formula par(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Kind::Atom; }
  const OrientedAtom& atom() const;
  const Formula& left() const;
  const Formula& right() const;

  Formula negate() const;
  AtomSeq atoms() const;
  std::size_t atom_count() const { return node_->atoms; }
  // |A| from the weight argument: atoms count 1, each connective adds 1
  std::size_t weight() const;
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Kind kind;
    OrientedAtom leaf;
    std::shared_ptr<const Formula> l, r;
    std::size_t atoms = 1;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  void collect(AtomSeq& out) const;

  std::shared_ptr<const Node> node_;
};

inline Formula negate(const Formula& f) { return f.negate(); }
inline AtomSeq atom_sequence(const Formula& f) { return f.atoms(); }
AtomSeq reverse_dual(const AtomSeq& s);

// identifiers, ~ (or ¬) for negation, * (or ⊗), | (or ⅋), parentheses.
// * binds tighter than |; both associate to the left.
Formula parse_formula(std::string_view text);

std::string to_string(const OrientedAtom& a);

} // namespace pnideal
