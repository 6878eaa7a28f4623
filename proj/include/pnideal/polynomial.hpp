#pragma once

#include "pnideal/atom_var.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pnideal {

using Rational = mpq_class;

class VarOrder {
public:
  VarOrder() = default;
  // lowest first
  explicit VarOrder(std::vector<AtomVar> ranked);

  std::size_t rank(AtomVar v) const;
  bool contains(AtomVar v) const { return rank_.count(v) != 0; }
  bool less(AtomVar a, AtomVar b) const { return rank(a) < rank(b); }
  const std::vector<AtomVar>& variables() const { return ranked_; }
  std::size_t size() const { return ranked_.size(); }

  friend bool operator==(const VarOrder& a, const VarOrder& b) {
    return a.ranked_ == b.ranked_;
  }

private:
  std::vector<AtomVar> ranked_;
  std::map<AtomVar, std::size_t> rank_;
};

class Monomial {
public:
  using Factor = std::pair<AtomVar, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(AtomVar v, std::uint32_t exp = 1);
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(AtomVar v) const;
  std::uint32_t degree() const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // precondition: other divides *this
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // structural order for use as a map key; not a monomial order
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<Factor> factors_; // sorted by variable, exponents > 0
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const VarOrder& o);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Rational c);
  explicit Polynomial(const Monomial& m, Rational c = 1);
  static Polynomial variable(AtomVar v) { return Polynomial(Monomial(v)); }
  // hi - lo
  static Polynomial difference(AtomVar hi, AtomVar lo);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  std::set<AtomVar> variables() const;

  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);
  Polynomial operator+(const Polynomial& p) const;
  Polynomial operator-(const Polynomial& p) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& p) const;
  Polynomial scaled(const Rational& c, const Monomial& m = Monomial()) const;
  // adds c*m*p to *this without building the product first
  void add_multiple(const Rational& c, const Monomial& m, const Polynomial& p);

  // variable-substituted copy (used to push polynomials along VarMaps)
  template <class F> Polynomial rename(F&& f) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      std::vector<Monomial::Factor> fs;
      for (auto [v, e] : m.factors())
        fs.emplace_back(f(v), e);
      out += Polynomial(Monomial(std::move(fs)), c);
    }
    return out;
  }

  // terms in structural order, descending degree first
  std::string to_string() const;
  // terms from leading to trailing under o
  std::string to_string(const VarOrder& o) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

Polynomial parse_polynomial(std::string_view text);

struct Leading {
  Term term;
  Monomial monomial;
  Rational coefficient;
  // exponents listed from the highest ranked variable downwards
  std::vector<std::uint32_t> multidegree;
};

Leading leading(const Polynomial& f, const VarOrder& o);
Monomial leading_monomial(const Polynomial& f, const VarOrder& o);
Term leading_term(const Polynomial& f, const VarOrder& o);
std::vector<std::uint32_t> multidegree(const Monomial& m, const VarOrder& o);

// f / LC(f)
Polynomial monic(const Polynomial& f, const VarOrder& o);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult divide_standard(const Polynomial& f, std::span<const Polynomial> divisors,
                               const VarOrder& o);
DivisionResult divide_early_stopping(const Polynomial& f,
                                     std::span<const Polynomial> divisors,
                                     const VarOrder& o);

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const VarOrder& o);

} // namespace pnideal
