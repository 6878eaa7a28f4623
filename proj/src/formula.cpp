#include "pnideal/formula.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <cctype>

namespace pnideal {

Formula Formula::atom(std::string name, Sign sign) {
  if (name.empty())
    throw ParseError("atom name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->leaf = OrientedAtom{std::move(name), sign};
  return Formula(std::move(n));
}

Formula Formula::tensor(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->atoms = a.atom_count() + b.atom_count();
  n->l = std::make_shared<const Formula>(std::move(a));
  n->r = std::make_shared<const Formula>(std::move(b));
  return Formula(std::move(n));
}

Formula Formula::par(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Par;
  n->atoms = a.atom_count() + b.atom_count();
  n->l = std::make_shared<const Formula>(std::move(a));
  n->r = std::make_shared<const Formula>(std::move(b));
  return Formula(std::move(n));
}

const OrientedAtom& Formula::atom() const {
  if (!is_atom())
    throw Error("formula is not an atom");
  return node_->leaf;
}

const Formula& Formula::left() const {
  if (is_atom())
    throw Error("atomic formula has no subformulas");
  return *node_->l;
}

const Formula& Formula::right() const {
  if (is_atom())
    throw Error("atomic formula has no subformulas");
  return *node_->r;
}

Formula Formula::negate() const {
  switch (kind()) {
  case Kind::Atom:
    return Formula::atom(node_->leaf.name, flip(node_->leaf.sign));
  case Kind::Tensor:
    return par(right().negate(), left().negate());
  case Kind::Par:
    return tensor(right().negate(), left().negate());
  }
  return *this;
}

void Formula::collect(AtomSeq& out) const {
  if (is_atom()) {
    out.push_back(node_->leaf);
    return;
  }
  left().collect(out);
  right().collect(out);
}

AtomSeq Formula::atoms() const {
  AtomSeq out;
  out.reserve(atom_count());
  collect(out);
  return out;
}

std::size_t Formula::weight() const {
  if (is_atom())
    return 1;
  return left().weight() + right().weight() + 1;
}

std::string Formula::to_string() const {
  if (is_atom())
    return pnideal::to_string(node_->leaf);
  auto side = [](const Formula& f) {
    return f.is_atom() ? f.to_string() : "(" + f.to_string() + ")";
  };
  const char* op = kind() == Kind::Tensor ? " * " : " | ";
  return side(left()) + op + side(right());
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind() || a.atom_count() != b.atom_count())
    return false;
  if (a.is_atom())
    return a.node_->leaf == b.node_->leaf;
  return a.left() == b.left() && a.right() == b.right();
}

AtomSeq reverse_dual(const AtomSeq& s) {
  AtomSeq out(s.rbegin(), s.rend());
  for (auto& a : out)
    a.sign = flip(a.sign);
  return out;
}

std::string to_string(const OrientedAtom& a) {
  return a.sign == Sign::Pos ? a.name : "~" + a.name;
}

namespace {

enum class Tok { Ident, Not, Tensor, Par, LParen, RParen, End };

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_start = 0;

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
           c == '.';
  }

  bool eat_utf8(std::string_view s) {
    if (src.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }

  void next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
    tok_start = pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[pos];
    if (c == '~') {
      ++pos;
      tok = Tok::Not;
    } else if (c == '*') {
      ++pos;
      tok = Tok::Tensor;
    } else if (c == '|') {
      ++pos;
      tok = Tok::Par;
    } else if (c == '(') {
      ++pos;
      tok = Tok::LParen;
    } else if (c == ')') {
      ++pos;
      tok = Tok::RParen;
    } else if (eat_utf8("\xC2\xAC")) { // ¬
      tok = Tok::Not;
    } else if (eat_utf8("\xE2\x8A\x97")) { // ⊗
      tok = Tok::Tensor;
    } else if (eat_utf8("\xE2\x85\x8B")) { // ⅋
      tok = Tok::Par;
    } else if (ident_char(c)) {
      std::size_t b = pos;
      while (pos < src.size() && ident_char(src[pos]))
        ++pos;
      ident = std::string(src.substr(b, pos - b));
      tok = Tok::Ident;
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("formula '" + std::string(src) + "' at column " +
                     std::to_string(tok_start + 1) + ": " + msg);
  }
};

struct Parser {
  Lexer lx;

  Formula unary() {
    if (lx.tok == Tok::Not) {
      lx.next();
      return unary().negate();
    }
    if (lx.tok == Tok::Ident) {
      Formula f = Formula::atom(lx.ident);
      lx.next();
      return f;
    }
    if (lx.tok == Tok::LParen) {
      lx.next();
      Formula f = par_expr();
      if (lx.tok != Tok::RParen)
        lx.fail("expected ')'");
      lx.next();
      return f;
    }
    lx.fail("expected atom, '~' or '('");
  }

  Formula tensor_expr() {
    Formula f = unary();
    while (lx.tok == Tok::Tensor) {
      lx.next();
      f = Formula::tensor(f, unary());
    }
    return f;
  }

  Formula par_expr() {
    Formula f = tensor_expr();
    while (lx.tok == Tok::Par) {
      lx.next();
      f = Formula::par(f, tensor_expr());
    }
    return f;
  }
};

} // namespace

Formula parse_formula(std::string_view text) {
  Parser p{Lexer{text}};
  p.lx.next();
  Formula f = p.par_expr();
  if (p.lx.tok != Tok::End)
    p.lx.fail("trailing input");
  return f;
}

} // namespace pnideal
