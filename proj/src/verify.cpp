#include "pnideal/verify.hpp"

#include "pnideal/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace pnideal {

json to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["net"] = r.net;
  j["pass"] = r.pass;
  if (r.vacuous)
    j["vacuous"] = true;
  if (r.witness)
    j["witness"] = *r.witness;
  return j;
}

std::string to_line(const TheoremReport& r) {
  std::string s = (r.pass ? "PASS " : "FAIL ") + r.theorem + " " + r.net;
  if (r.vacuous)
    s += " (vacuous)";
  if (r.witness)
    s += " witness: " + *r.witness;
  return s;
}

namespace {

std::string show(const std::vector<Polynomial>& ps, const VarOrder& o) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i)
      s += ", ";
    s += ps[i].to_string(o);
  }
  return s + "}";
}

// elements of a not in b
std::vector<Polynomial> minus(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end())
      out.push_back(p);
  return out;
}

std::string set_diff_witness(const std::vector<Polynomial>& lhs, const std::vector<Polynomial>& rhs,
                             const VarOrder& o, const char* lname, const char* rname) {
  return std::string("only in ") + lname + ": " + show(minus(lhs, rhs), o) + "; only in " +
         rname + ": " + show(minus(rhs, lhs), o);
}

template <class F> TheoremReport guarded(const std::string& theorem, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    TheoremReport r;
    r.theorem = theorem;
    r.pass = false;
    r.witness = std::string("error: ") + e.what();
    return r;
  }
}

std::set<AtomVar> image_of_T(const NormalizationResult& seq) {
  std::set<AtomVar> out;
  for (auto v : seq.normal.variables())
    out.insert(seq.map.T(v));
  return out;
}

} // namespace

TheoremReport check_ideal_intersection(const ProofStructure& g, const Redex& r,
                                       const CheckOptions& opts) {
  return guarded("intersection", [&] {
    TheoremReport rep{"intersection", "", false, false, std::nullopt};
    Reduction red = reduce(g, r);
    NormalizationResult seq{red.result, red.map, {r}};
    VarOrder o = order_gamma(g, seq, opts.ideal);
    Basis B = buchberger_standard(link_generators(g, opts.ideal).polynomials(), o);
    auto low = image_of_T(seq);
    auto meet = restrict_to(B.polys, low);
    std::vector<Polynomial> gp;
    for (auto& p : link_generators(red.result, opts.ideal).polynomials())
      gp.push_back(p.rename([&](AtomVar v) { return red.map.T(v); }));
    rep.pass = ideal_equal(meet, gp, o);
    if (!rep.pass) {
      auto lhs = meet.empty() ? std::vector<Polynomial>{}
                              : reduced_basis(buchberger_standard(meet, o)).polys;
      auto rhs = gp.empty() ? std::vector<Polynomial>{}
                            : reduced_basis(buchberger_standard(gp, o)).polys;
      rep.witness = set_diff_witness(lhs, rhs, o, "I_pi meet P_pi'", "I_pi'");
    }
    return rep;
  });
}

TheoremReport check_elimination_theorem(const ProofStructure& g, const NormalizationResult& seq,
                                        const CheckOptions& opts) {
  return guarded("elimination", [&] {
    TheoremReport rep{"elimination", "", false, false, std::nullopt};
    if (seq.trace.empty()) {
      rep.pass = true;
      rep.vacuous = true;
      return rep;
    }
    VarOrder o = order_gamma(g, seq, opts.ideal);
    auto G = generator_sequence(g, o, opts.ideal);
    Basis B = buchberger_es(G, o);
    auto lhs = canonical_set(restrict_to(B.polys, image_of_T(seq)), o);
    std::vector<Polynomial> g0;
    for (auto& p : generator_sequence(seq.normal, order_zero(seq.normal, opts.ideal), opts.ideal))
      g0.push_back(p.rename([&](AtomVar v) { return seq.map.T(v); }));
    auto rhs = canonical_set(g0, o);
    rep.pass = lhs == rhs;
    if (!rep.pass)
      rep.witness = set_diff_witness(lhs, rhs, o, "Bes meet P_pi'", "G0(pi')");
    return rep;
  });
}

TheoremReport check_elimination_theorem(const ProofStructure& g,
                                        const std::vector<std::size_t>& steps,
                                        const CheckOptions& opts) {
  return guarded("elimination", [&] {
    return check_elimination_theorem(g, run_steps(g, steps), opts);
  });
}

TheoremReport check_execution_theorem(const ProofStructure& g, const CheckOptions& opts) {
  return guarded("execution", [&] {
    TheoremReport rep{"execution", "", false, false, std::nullopt};
    NormalizationResult nf = normalize(g);
    VarOrder on = order_n(g, opts.ideal);
    auto G = generator_sequence(g, on, opts.ideal);
    Basis B = buchberger_standard(G, on);
    auto lhs = canonical_set(restrict_to(B.polys, image_of_T(nf)), on);
    std::vector<Polynomial> gn;
    for (auto& p : generator_sequence(nf.normal, order_n(nf.normal, opts.ideal), opts.ideal))
      gn.push_back(p.rename([&](AtomVar v) { return nf.map.T(v); }));
    auto rhs = canonical_set(gn, on);
    rep.pass = lhs == rhs;
    if (!rep.pass)
      rep.witness = set_diff_witness(lhs, rhs, on, "B meet P_normal", "Gn(normal)");
    return rep;
  });
}

std::vector<std::size_t> goi_permutation(const ProofStructure& g0) {
  ProofStructure g = eta_expand(g0);
  while (true) {
    auto rs = find_redexes(g);
    auto it = std::find_if(rs.begin(), rs.end(),
                           [](const Redex& r) { return r.kind == RedexKind::M; });
    if (it == rs.end())
      break;
    g = reduce(g, *it).result;
  }
  auto ces = g.conclusion_edges();
  if (ces.size() != 1)
    throw StructureError("goi_permutation needs a single conclusion");
  EdgeId ce = ces[0];
  std::size_t n = g.edge(ce).formula.atom_count();
  std::size_t budget = 4 * (g.edges().size() + 1);

  auto other_conclusion = [&](NodeId ax, EdgeId e) {
    auto cs = g.conclusions(ax);
    if (cs.size() != 2)
      throw StructureError("axiom without two conclusions");
    return cs[0] == e ? cs[1] : cs[0];
  };

  std::vector<std::size_t> delta(n);
  for (std::size_t q = 0; q < n; ++q) {
    EdgeId e = ce;
    std::size_t idx = q;
    std::size_t steps = 0;
    // climb to the axiom owning this atom
    while (true) {
      if (++steps > budget)
        throw StructureError("goi: climb does not terminate");
      const Node& src = g.node(g.edge(e).src);
      if (src.kind == NodeKind::Axiom)
        break;
      if (src.kind != NodeKind::Tensor && src.kind != NodeKind::Par)
        throw StructureError("goi: unexpected link while climbing");
      auto ps = g.premises(src.id);
      std::size_t la = g.edge(ps[0]).formula.atom_count();
      if (idx < la) {
        e = ps[0];
      } else {
        e = ps[1];
        idx -= la;
      }
    }
    if (!g.edge(e).formula.is_atom())
      throw StructureError("goi: compound axiom after eta expansion");
    // follow the chain of axioms and cuts
    EdgeId out = other_conclusion(g.edge(e).src, e);
    while (true) {
      if (++steps > budget)
        throw StructureError("goi: chain does not terminate");
      const Node& d = g.node(g.edge(out).dst);
      if (d.kind != NodeKind::Cut)
        break;
      auto ps = g.premises(d.id);
      EdgeId partner = ps[0] == out ? ps[1] : ps[0];
      const Node& ax = g.node(g.edge(partner).src);
      if (ax.kind != NodeKind::Axiom)
        throw StructureError("goi: cut premise " + std::to_string(partner) +
                             " does not come from an axiom");
      out = other_conclusion(ax.id, partner);
    }
    // descend to the conclusion
    e = out;
    idx = 0;
    while (true) {
      if (++steps > budget)
        throw StructureError("goi: descent does not terminate");
      const Node& d = g.node(g.edge(e).dst);
      if (d.kind == NodeKind::Conclusion)
        break;
      if (d.kind != NodeKind::Tensor && d.kind != NodeKind::Par)
        throw StructureError("goi: unexpected link while descending");
      auto ps = g.premises(d.id);
      if (ps[1] == e)
        idx += g.edge(ps[0]).formula.atom_count();
      e = g.conclusions(d.id).at(0);
    }
    if (e != ce)
      throw StructureError("goi: chain ends at another conclusion");
    delta[q] = idx;
  }
  return delta;
}

std::vector<std::size_t> boundary_involution(const ProofStructure& g, const IdealOptions& opts) {
  BoundaryData b = boundary(g, opts);
  std::size_t n = b.U.size() + b.V.size();
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < b.U.size(); ++i) {
    std::size_t u = b.U[i].index, v = b.V[b.sigma[i]].index;
    inv[u] = v;
    inv[v] = u;
  }
  return inv;
}

TheoremReport check_goi(const ProofStructure& g, const CheckOptions& opts) {
  return guarded("goi", [&] {
    TheoremReport rep{"goi", "", false, false, std::nullopt};
    auto delta = goi_permutation(g);
    auto sigma = boundary_involution(g, opts.ideal);
    rep.pass = delta == sigma;
    if (!rep.pass) {
      std::ostringstream os;
      for (std::size_t q = 0; q < delta.size(); ++q)
        if (delta[q] != sigma[q])
          os << (os.tellp() ? "; " : "") << "position " << q << ": delta -> " << delta[q]
             << ", sigma -> " << sigma[q];
      rep.witness = os.str();
    }
    return rep;
  });
}

TheoremReport check_ts_identities(const ProofStructure& g, const Redex& r,
                                  const CheckOptions& opts) {
  return guarded("ts", [&] {
    TheoremReport rep{"ts", "", true, false, std::nullopt};
    Reduction red = reduce(g, r);
    const VarMap& m = red.map;
    for (auto y : red.result.variables()) {
      if (m.S(m.T(y)) != y) {
        rep.pass = false;
        rep.witness = "S(T(" + to_string(y) + ")) = " + to_string(m.S(m.T(y)));
        return rep;
      }
    }
    VarOrder o(g.variables());
    auto gens = link_generators(g, opts.ideal).polynomials();
    Basis gb = gens.empty() ? Basis{{}, o} : reduced_basis(buchberger_standard(gens, o));
    for (auto x : g.variables()) {
      Polynomial d = Polynomial::variable(m.T(m.S(x))) - Polynomial::variable(x);
      if (!reduces_to_zero(d, gb)) {
        rep.pass = false;
        rep.witness = "T(S(" + to_string(x) + ")) - " + to_string(x) + " = " + d.to_string(o) +
                      " is not in I_pi";
        return rep;
      }
    }
    // the induced maps respect the ideals
    VarOrder o2(red.result.variables());
    auto gens2 = link_generators(red.result, opts.ideal).polynomials();
    Basis gb2 = gens2.empty() ? Basis{{}, o2} : reduced_basis(buchberger_standard(gens2, o2));
    for (auto& f : gens) {
      Polynomial sf = f.rename([&](AtomVar v) { return m.S(v); });
      if (!reduces_to_zero(sf, gb2)) {
        rep.pass = false;
        rep.witness = "S(" + f.to_string(o) + ") is not in I_pi'";
        return rep;
      }
    }
    for (auto& f : gens2) {
      Polynomial tf = f.rename([&](AtomVar v) { return m.T(v); });
      if (!reduces_to_zero(tf, gb)) {
        rep.pass = false;
        rep.witness = "T(" + f.to_string(o2) + ") is not in I_pi";
        return rep;
      }
    }
    return rep;
  });
}

SequentProof smallest_proof() {
  return SequentProof::par(SequentProof::axiom(Formula::atom("A")), 0, 1);
}

SequentProof lambda_proof() {
  Formula u = Formula::atom("U");
  auto t = SequentProof::tensor(SequentProof::axiom(u), SequentProof::axiom(u), 1, 0);
  auto p = SequentProof::par(SequentProof::axiom(u), 1, 0);
  return SequentProof::cut(std::move(t), std::move(p), 1, 0);
}

SequentProof detour_body_proof() {
  Formula a = Formula::atom("A");
  auto t = SequentProof::tensor(SequentProof::axiom(a), SequentProof::axiom(a), 1, 0);
  auto p = SequentProof::par(SequentProof::axiom(a), 1, 0);
  return SequentProof::cut(std::move(t), std::move(p), 1, 0);
}

SequentProof detour_proof() { return SequentProof::par(detour_body_proof(), 0, 1); }

ProofStructure smallest_net() { return translate(smallest_proof()); }
ProofStructure lambda_net() { return translate(lambda_proof()); }
ProofStructure detour_net() { return translate(detour_proof()); }

std::vector<NamedNet> named_nets() {
  return {{"smallest", smallest_net()},
          {"lambda", combine_conclusions(lambda_net())},
          {"detour", detour_net()}};
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

std::vector<NamedNet> random_corpus(std::uint64_t seed, std::size_t count,
                                    const CorpusLimits& limits) {
  std::vector<NamedNet> out;
  std::uint64_t s = seed;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1))
      throw Error("random_corpus: could not satisfy the limits");
    std::uint64_t this_seed = s++;
    ProofStructure g = translate(random_net(this_seed, limits.max_rules, limits.atomic_axioms));
    if (g.conclusion_nodes().size() > 1)
      g = combine_conclusions(g);
    if (g.conclusion_nodes().size() != 1)
      continue;
    std::size_t cuts = g.cut_count();
    if (cuts < limits.min_cuts || cuts > limits.max_cuts ||
        g.variables().size() > limits.max_vars)
      continue;
    out.push_back(NamedNet{"random:" + std::to_string(this_seed), std::move(g)});
  }
  return out;
}

std::string to_string(Suite s) {
  switch (s) {
  case Suite::Intersection: return "intersection";
  case Suite::Elimination: return "elimination";
  case Suite::Execution: return "execution";
  case Suite::Goi: return "goi";
  case Suite::Ts: return "ts";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& s) {
  for (Suite x : all_suites())
    if (to_string(x) == s)
      return x;
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::Intersection, Suite::Elimination, Suite::Execution, Suite::Goi, Suite::Ts};
}

std::vector<TheoremReport> run_suite(Suite s, const NamedNet& n, std::uint64_t seed,
                                     const CheckOptions& opts) {
  std::mt19937_64 rng(seed ^ fnv1a(n.name) ^ (static_cast<std::uint64_t>(s) << 56));
  std::vector<TheoremReport> out;
  auto redexes = find_redexes(n.net);
  auto vacuous = [&](const std::string& th) {
    TheoremReport r{th, n.name, true, true, std::nullopt};
    return r;
  };
  auto pick = [&](const std::vector<Redex>& rs) {
    return static_cast<std::size_t>(rng() % rs.size());
  };
  switch (s) {
  case Suite::Intersection:
    out.push_back(redexes.empty() ? vacuous("intersection")
                                  : check_ideal_intersection(n.net, redexes[pick(redexes)], opts));
    break;
  case Suite::Elimination:
    if (redexes.empty()) {
      out.push_back(vacuous("elimination"));
    } else {
      auto r1 = check_elimination_theorem(n.net, std::vector<std::size_t>{pick(redexes)}, opts);
      r1.theorem = "elimination/step";
      out.push_back(r1);
      TheoremReport r2 = guarded("elimination/normalize", [&] {
        auto seq = normalize(n.net, [&](const std::vector<Redex>& rs) { return pick(rs); });
        auto r = check_elimination_theorem(n.net, seq, opts);
        r.theorem = "elimination/normalize";
        return r;
      });
      out.push_back(r2);
    }
    break;
  case Suite::Execution:
    out.push_back(check_execution_theorem(n.net, opts));
    break;
  case Suite::Goi:
    out.push_back(check_goi(n.net, opts));
    break;
  case Suite::Ts:
    out.push_back(redexes.empty() ? vacuous("ts")
                                  : check_ts_identities(n.net, redexes[pick(redexes)], opts));
    break;
  }
  for (auto& r : out)
    r.net = n.name;
  return out;
}

} // namespace pnideal
