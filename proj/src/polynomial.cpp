#include "pnideal/polynomial.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace pnideal {

std::string to_string(AtomVar v) {
  return "x" + std::to_string(v.edge) + "_" + std::to_string(v.index);
}

AtomVar parse_atom_var(std::string_view s) {
  auto bad = [&] { return ParseError("bad variable '" + std::string(s) + "'"); };
  if (s.size() < 4 || s[0] != 'x')
    throw bad();
  auto us = s.find('_');
  if (us == std::string_view::npos)
    throw bad();
  AtomVar v;
  auto r1 = std::from_chars(s.data() + 1, s.data() + us, v.edge);
  auto r2 = std::from_chars(s.data() + us + 1, s.data() + s.size(), v.index);
  if (r1.ec != std::errc() || r1.ptr != s.data() + us || r2.ec != std::errc() ||
      r2.ptr != s.data() + s.size())
    throw bad();
  return v;
}

VarOrder::VarOrder(std::vector<AtomVar> ranked) : ranked_(std::move(ranked)) {
  for (std::size_t i = 0; i < ranked_.size(); ++i)
    if (!rank_.emplace(ranked_[i], i).second)
      throw OrderError("variable " + to_string(ranked_[i]) + " ranked twice");
}

std::size_t VarOrder::rank(AtomVar v) const {
  auto it = rank_.find(v);
  if (it == rank_.end())
    throw OrderError("variable " + to_string(v) + " is not ranked");
  return it->second;
}

Monomial::Monomial(AtomVar v, std::uint32_t exp) {
  if (exp)
    factors_.emplace_back(v, exp);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [v, e] : factors) {
    if (!e)
      continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
}

std::uint32_t Monomial::exponent(AtomVar v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto& f : factors_)
    d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.factors_.begin();
  for (auto& [v, e] : factors_) {
    while (it != m.factors_.end() && it->first < v)
      ++it;
    if (it == m.factors_.end() || it->first != v || it->second < e)
      return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial out;
  auto a = factors_.begin(), b = m.factors_.begin();
  while (a != factors_.end() || b != m.factors_.end()) {
    if (b == m.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this))
    throw Error("monomial division is not exact");
  Monomial out;
  for (auto& [v, e] : factors_) {
    auto d = e - other.exponent(v);
    if (d)
      out.factors_.emplace_back(v, d);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto x = a.factors_.begin(), y = b.factors_.begin();
  while (x != a.factors_.end() || y != b.factors_.end()) {
    if (y == b.factors_.end() || (x != a.factors_.end() && x->first < y->first))
      out.factors_.push_back(*x++);
    else if (x == a.factors_.end() || y->first < x->first)
      out.factors_.push_back(*y++);
    else {
      out.factors_.emplace_back(x->first, std::max(x->second, y->second));
      ++x, ++y;
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  auto x = a.factors_.begin(), y = b.factors_.begin();
  while (x != a.factors_.end() && y != b.factors_.end()) {
    if (x->first == y->first)
      return false;
    if (x->first < y->first)
      ++x;
    else
      ++y;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty())
    return "1";
  std::string s;
  for (auto& [v, e] : factors_) {
    if (!s.empty())
      s += '*';
    s += pnideal::to_string(v);
    if (e != 1)
      s += "^" + std::to_string(e);
  }
  return s;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const VarOrder& o) {
  // the highest ranked variable with differing exponents decides
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto x = fa.begin(), y = fb.begin();
  std::size_t best = 0;
  bool found = false;
  std::strong_ordering res = std::strong_ordering::equal;
  auto consider = [&](AtomVar v, std::uint32_t ea, std::uint32_t eb) {
    std::size_t r = o.rank(v);
    if (ea == eb)
      return;
    if (!found || r > best) {
      found = true;
      best = r;
      res = ea <=> eb;
    }
  };
  while (x != fa.end() || y != fb.end()) {
    if (y == fb.end() || (x != fa.end() && x->first < y->first)) {
      consider(x->first, x->second, 0);
      ++x;
    } else if (x == fa.end() || y->first < x->first) {
      consider(y->first, 0, y->second);
      ++y;
    } else {
      consider(x->first, x->second, y->second);
      ++x, ++y;
    }
  }
  return res;
}

Polynomial::Polynomial(Rational c) {
  if (c != 0)
    terms_.emplace(Monomial(), std::move(c));
}

Polynomial::Polynomial(const Monomial& m, Rational c) {
  if (c != 0)
    terms_.emplace(m, std::move(c));
}

Polynomial Polynomial::difference(AtomVar hi, AtomVar lo) {
  Polynomial p = variable(hi);
  p -= variable(lo);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<AtomVar> Polynomial::variables() const {
  std::set<AtomVar> out;
  for (auto& [m, c] : terms_)
    for (auto& f : m.factors())
      out.insert(f.first);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  for (auto& [m, c] : p.terms_)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& p) {
  for (auto& [m, c] : p.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& p) const {
  Polynomial out = *this;
  out += p;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& p) const {
  Polynomial out = *this;
  out -= p;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (auto& [m, c] : terms_)
    out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& p) const {
  Polynomial out;
  for (auto& [m, c] : terms_)
    for (auto& [m2, c2] : p.terms_)
      out.add_term(m * m2, c * c2);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial out;
  if (c == 0)
    return out;
  for (auto& [m2, c2] : terms_)
    out.terms_.emplace(m * m2, c * c2);
  return out;
}

void Polynomial::add_multiple(const Rational& c, const Monomial& m, const Polynomial& p) {
  if (c == 0)
    return;
  for (auto& [m2, c2] : p.terms_)
    add_term(m * m2, c * c2);
}

namespace {

void append_term(std::string& s, const Monomial& m, const Rational& c) {
  bool neg = sgn(c) < 0;
  Rational a = abs(c);
  if (s.empty())
    s += neg ? "-" : "";
  else
    s += neg ? " - " : " + ";
  if (m.is_one()) {
    s += a.get_str();
  } else {
    if (a != 1)
      s += a.get_str() + "*";
    s += m.to_string();
  }
}

} // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::vector<const std::pair<const Monomial, Rational>*> ts;
  for (auto& t : terms_)
    ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return a->first.degree() > b->first.degree();
  });
  std::string s;
  for (auto* t : ts)
    append_term(s, t->first, t->second);
  return s;
}

std::string Polynomial::to_string(const VarOrder& o) const {
  if (terms_.empty())
    return "0";
  std::vector<const std::pair<const Monomial, Rational>*> ts;
  for (auto& t : terms_)
    ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return compare(a->first, b->first, o) > 0; });
  std::string s;
  for (auto* t : ts)
    append_term(s, t->first, t->second);
  return s;
}

Polynomial parse_polynomial(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("polynomial '" + std::string(text) + "' at column " +
                      std::to_string(pos + 1) + ": " + msg);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto number = [&]() -> std::string {
    std::size_t b = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    return std::string(text.substr(b, pos - b));
  };
  Polynomial out;
  skip();
  if (text.substr(pos) == "0")
    return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first)
        throw fail("empty polynomial");
      break;
    }
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-')
        sign = -1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = sign;
    std::vector<Monomial::Factor> fs;
    while (true) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string n = number();
        try {
          Rational q(n);
          q.canonicalize();
          coef *= q;
        } catch (const std::exception&) {
          throw fail("bad coefficient '" + n + "'");
        }
      } else if (pos < text.size() && text[pos] == 'x') {
        std::size_t b = pos++;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        AtomVar v = parse_atom_var(text.substr(b, pos - b));
        std::uint32_t e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::string n = number();
          if (n.empty() || n.find('/') != std::string::npos)
            throw fail("bad exponent");
          e = static_cast<std::uint32_t>(std::stoul(n));
        }
        fs.emplace_back(v, e);
      } else {
        throw fail("expected coefficient or variable");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out += Polynomial(Monomial(std::move(fs)), coef);
  }
  return out;
}

std::vector<std::uint32_t> multidegree(const Monomial& m, const VarOrder& o) {
  std::vector<std::uint32_t> d(o.size(), 0);
  for (auto& [v, e] : m.factors())
    d[o.size() - 1 - o.rank(v)] = e;
  return d;
}

Term leading_term(const Polynomial& f, const VarOrder& o) {
  if (f.is_zero())
    throw Error("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (compare(it->first, best->first, o) > 0)
      best = it;
  return Term{best->first, best->second};
}

Monomial leading_monomial(const Polynomial& f, const VarOrder& o) {
  return leading_term(f, o).monomial;
}

Leading leading(const Polynomial& f, const VarOrder& o) {
  Term t = leading_term(f, o);
  return Leading{t, t.monomial, t.coefficient, multidegree(t.monomial, o)};
}

Polynomial monic(const Polynomial& f, const VarOrder& o) {
  if (f.is_zero())
    return f;
  Rational lc = leading_term(f, o).coefficient;
  return f.scaled(1 / lc);
}

namespace {

template <bool EarlyStop>
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const VarOrder& o) {
  std::vector<Term> lts;
  lts.reserve(divisors.size());
  for (auto& g : divisors) {
    if (g.is_zero())
      throw Error("division by the zero polynomial");
    lts.push_back(leading_term(g, o));
  }
  DivisionResult res;
  res.quotients.resize(divisors.size());
  Polynomial p = f;
  while (!p.is_zero()) {
    Term lt = leading_term(p, o);
    bool divided = false;
    for (std::size_t i = 0; i < lts.size(); ++i) {
      if (!lts[i].monomial.divides(lt.monomial))
        continue;
      Rational c = lt.coefficient / lts[i].coefficient;
      Monomial m = lt.monomial / lts[i].monomial;
      res.quotients[i] += Polynomial(m, c);
      p.add_multiple(-c, m, divisors[i]);
      divided = true;
      break;
    }
    if (divided)
      continue;
    if constexpr (EarlyStop) {
      res.remainder += p;
      break;
    } else {
      Polynomial t(lt.monomial, lt.coefficient);
      res.remainder += t;
      p -= t;
    }
  }
  return res;
}

} // namespace

DivisionResult divide_standard(const Polynomial& f, std::span<const Polynomial> divisors,
                               const VarOrder& o) {
  return divide<false>(f, divisors, o);
}

DivisionResult divide_early_stopping(const Polynomial& f,
                                     std::span<const Polynomial> divisors,
                                     const VarOrder& o) {
  return divide<true>(f, divisors, o);
}

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const VarOrder& o) {
  Term a = leading_term(g, o);
  Term b = leading_term(h, o);
  Monomial l = Monomial::lcm(a.monomial, b.monomial);
  Polynomial s = g.scaled(1 / a.coefficient, l / a.monomial);
  s.add_multiple(-1 / b.coefficient, l / b.monomial, h);
  return s;
}

} // namespace pnideal
