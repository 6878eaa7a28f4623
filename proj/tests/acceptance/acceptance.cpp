// Acceptance run: one line per criterion, exit status 1 if any fails.
#include "pnideal/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

using namespace pnideal;

namespace {

constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::size_t kCorpusSize = 100;
constexpr std::uint64_t kStepSeed = 42;
constexpr std::uint64_t kGraphSeed = 7;
constexpr std::size_t kGraphCount = 500;

// wall-clock limits in seconds
constexpr double kLimitExample = 1.0;
constexpr double kLimitGraphs = 30.0;
constexpr double kLimitCorpus = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, const std::string& what, double limit, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  bool in_time = dt < limit;
  bool ok = o.pass && in_time;
  if (!ok)
    ++failures;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << dt
     << "s / " << limit << "s]";
  if (!in_time)
    os << " too slow";
  if (!o.detail.empty())
    os << "  " << o.detail;
  std::printf("%s\n", os.str().c_str());
  std::fflush(stdout);
}

const std::vector<NamedNet>& corpus() {
  static const std::vector<NamedNet> c = random_corpus(kCorpusSeed, kCorpusSize);
  return c;
}

std::mt19937_64 step_rng(const NamedNet& n) {
  std::uint64_t h = kStepSeed;
  for (unsigned char ch : n.name)
    h = h * 1099511628211ull ^ ch;
  return std::mt19937_64(h);
}

Polynomial d(AtomVar hi, AtomVar lo) { return Polynomial::difference(hi, lo); }

using EdgeState = std::tuple<AtomVar, AtomVar, bool>;
std::set<EdgeState> state(const OrderedGraph& g) {
  std::set<EdgeState> s;
  for (auto& e : g.edges())
    s.insert({e.source, e.target, e.live});
  return s;
}

Outcome criterion1() {
  ProofStructure g = detour_net();
  auto paths = persistent_paths(g);
  if (paths.size() != 1 || paths[0].size() != 12)
    return {false, "detour does not have one persistent path of length 12"};
  std::vector<AtomVar> x{AtomVar{-1, 0}};
  x.insert(x.end(), paths[0].begin(), paths[0].end());
  auto rs = find_redexes(g);
  if (rs.size() != 1 || rs[0].kind != RedexKind::M)
    return {false, "expected a single m-redex"};
  Reduction red = reduce(g, rs[0]);
  NormalizationResult seq{red.result, red.map, {rs[0]}};
  VarOrder o = order_gamma(g, seq);
  auto G = generator_sequence(g, o);
  std::vector<Polynomial> want{d(x[2], x[1]), d(x[3], x[2]),  d(x[7], x[6]),  d(x[11], x[10]),
                               d(x[12], x[11]), d(x[4], x[3]), d(x[5], x[6]),  d(x[5], x[4]),
                               d(x[8], x[7]),  d(x[9], x[10]), d(x[9], x[8])};
  if (G != want)
    return {false, "G^(gamma) differs from the 11-binomial sequence"};
  OrderedGraph n = falling_roofs(sim_graph(g, o));
  auto E = [&](int a, int b, bool live) { return EdgeState{x[a], x[b], live}; };
  std::set<EdgeState> fig{E(8, 9, false),  E(4, 5, false),  E(10, 9, false), E(7, 8, false),
                          E(6, 5, false),  E(3, 4, false),  E(11, 12, true),  E(10, 11, true),
                          E(6, 7, true),   E(2, 3, true),   E(1, 2, true),    E(3, 6, true),
                          E(7, 10, true)};
  if (state(n) != fig)
    return {false, "falling roofs marking differs from the figure"};
  std::set<AtomVar> low{x[1], x[2], x[3], x[6], x[7], x[10], x[11], x[12]};
  auto top = cut_top(n, low);
  std::vector<Polynomial> want_top{d(x[2], x[1]), d(x[3], x[2]),   d(x[6], x[3]),  d(x[7], x[6]),
                                   d(x[10], x[7]), d(x[11], x[10]), d(x[12], x[11])};
  if (canonical_set(top, o) != canonical_set(want_top, o) || top.size() != 7)
    return {false, "cut_top differs"};
  if (canonical_set(graph_generators(n), o) != canonical_set(buchberger_es(G, o).polys, o))
    return {false, "Bes(G^(gamma)) differs from G_N"};
  return {true, "11 generators, 13 edges (6 dead), 7 survivors"};
}

Outcome criterion2() {
  auto v = [](int i) { return AtomVar{i, 0}; };
  std::vector<AtomVar> xs;
  for (int i = 1; i <= 6; ++i)
    xs.push_back(v(i));
  VarOrder o({v(5), v(1), v(6), v(3), v(2), v(4)});
  OrderedGraph s = graph_from_relation(
      xs, o, {{v(1), v(2)}, {v(2), v(3)}, {v(3), v(4)}, {v(4), v(5)}, {v(5), v(6)}});
  auto E = [&](int a, int b, bool live) { return EdgeState{v(a), v(b), live}; };
  std::vector<std::set<EdgeState>> panels{
      {E(1, 2, true), E(3, 2, true), E(3, 4, true), E(5, 4, true), E(5, 6, true)},
      {E(1, 2, false), E(3, 2, false), E(1, 3, true), E(3, 4, true), E(5, 4, true),
       E(5, 6, true)},
      {E(1, 2, false), E(3, 2, false), E(1, 3, true), E(3, 4, false), E(5, 4, false),
       E(5, 3, true), E(5, 6, true)},
      {E(1, 2, false), E(3, 2, false), E(1, 3, false), E(3, 4, false), E(5, 4, false),
       E(5, 1, true), E(5, 6, true)}};
  std::vector<std::set<EdgeState>> seen;
  int pass = 0;
  FallingRoofsOptions opts;
  opts.observer = [&](RoofEvent ev, const OrderedGraph& n) {
    if (ev == RoofEvent::Start)
      seen.push_back(state(n));
    if (ev == RoofEvent::PassDone && ++pass == 1)
      seen.push_back(state(n));
    if (ev == RoofEvent::RoofOpened && pass == 1)
      seen.push_back(state(n));
    if (ev == RoofEvent::Finished)
      seen.push_back(state(n));
  };
  OrderedGraph n = falling_roofs(s, opts);
  if (seen.size() != 4)
    return {false, "observer saw " + std::to_string(seen.size()) + " panels"};
  for (std::size_t i = 0; i < 4; ++i)
    if (seen[i] != panels[i])
      return {false, "panel " + std::to_string(i + 1) + " differs"};
  auto top = cut_top(n, {v(1), v(5), v(6)});
  if (top != std::vector<Polynomial>{d(v(1), v(5)), d(v(6), v(5))})
    return {false, "cut_top differs"};
  return {true, "4 panels, cut_top {X6-X5, X1-X5}"};
}

OrderedGraph random_linear_graph(std::mt19937_64& rng) {
  std::size_t nv = 2 + rng() % 29;
  std::size_t comps = 1 + rng() % std::min<std::size_t>(5, nv);
  std::vector<AtomVar> vs;
  for (std::size_t i = 0; i < nv; ++i)
    vs.push_back(AtomVar{static_cast<int>(i), 0});
  std::vector<AtomVar> ranked = vs;
  std::shuffle(ranked.begin(), ranked.end(), rng);
  VarOrder o(ranked);
  std::vector<AtomVar> walk = vs;
  std::shuffle(walk.begin(), walk.end(), rng);
  // cut the walk into `comps` nonempty runs
  std::set<std::size_t> cuts;
  while (cuts.size() + 1 < comps)
    cuts.insert(1 + rng() % (nv - 1));
  std::vector<std::pair<AtomVar, AtomVar>> sim;
  for (std::size_t i = 0; i + 1 < nv; ++i)
    if (!cuts.count(i + 1))
      sim.push_back({walk[i], walk[i + 1]});
  return graph_from_relation(vs, o, sim);
}

Outcome criterion3() {
  std::mt19937_64 rng(kGraphSeed);
  std::size_t ordered_same = 0;
  for (std::size_t k = 0; k < kGraphCount; ++k) {
    OrderedGraph s = random_linear_graph(rng);
    const VarOrder& o = s.order();
    OrderedGraph n = falling_roofs(s);
    Basis es = buchberger_es(graph_generators(s), o);
    if (canonical_set(es.polys, o) != canonical_set(graph_generators(n), o))
      return {false, "graph " + std::to_string(k) + ": Bes != G_N"};
    if (es.polys.size() != n.edges().size())
      return {false, "graph " + std::to_string(k) + ": sizes differ"};
    if (es.polys == graph_generators_inserted(n))
      ++ordered_same;
  }
  return {true, std::to_string(kGraphCount) + " graphs; append order also equal in " +
                    std::to_string(ordered_same)};
}

Outcome criterion4() {
  std::size_t a = 0, b = 0;
  for (auto& n : corpus()) {
    auto rng = step_rng(n);
    auto rs = find_redexes(n.net);
    auto r1 = check_elimination_theorem(n.net, std::vector<std::size_t>{rng() % rs.size()});
    if (!r1.pass)
      return {false, "single step: " + to_line(r1)};
    ++a;
    auto seq = normalize(n.net, [&](const std::vector<Redex>& xs) { return rng() % xs.size(); });
    auto r2 = check_elimination_theorem(n.net, seq);
    if (!r2.pass)
      return {false, "normalization: " + to_line(r2)};
    ++b;
  }
  return {true, std::to_string(a) + " single steps, " + std::to_string(b) + " normalizations"};
}

Outcome criterion5() {
  for (auto& n : corpus()) {
    auto r = check_execution_theorem(n.net);
    if (!r.pass)
      return {false, to_line(r)};
  }
  return {true, std::to_string(corpus().size()) + " nets"};
}

Outcome criterion6() {
  for (auto& n : corpus()) {
    auto rng = step_rng(n);
    auto rs = find_redexes(n.net);
    auto r = check_ideal_intersection(n.net, rs[rng() % rs.size()]);
    if (!r.pass)
      return {false, to_line(r)};
  }
  return {true, std::to_string(corpus().size()) + " single steps"};
}

bool has_compound_cut(const ProofStructure& g) {
  for (NodeId c : g.nodes_of_kind(NodeKind::Cut))
    if (!g.edge(g.premises(c)[0]).formula.is_atom())
      return true;
  return false;
}

Outcome criterion7() {
  std::size_t compound = 0, atomic_only_non_gb = 0, atomic_only = 0;
  for (auto& n : corpus()) {
    VarOrder o0 = order_zero(n.net);
    Basis g0{generator_sequence(n.net, o0), o0};
    if (!is_groebner(g0) || !is_minimal(g0))
      return {false, n.name + ": G0 is not a minimal Groebner basis"};
    auto rng = step_rng(n);
    auto rs = find_redexes(n.net);
    std::vector<NormalizationResult> gammas{
        run_steps(n.net, {static_cast<std::size_t>(rng() % rs.size())}),
        normalize(n.net, [&](const std::vector<Redex>& xs) { return rng() % xs.size(); })};
    bool all_non_gb = true;
    for (auto& seq : gammas) {
      VarOrder og = order_gamma(n.net, seq);
      if (is_groebner(Basis{generator_sequence(n.net, og), og}))
        all_non_gb = false;
    }
    if (has_compound_cut(n.net)) {
      ++compound;
      if (!all_non_gb)
        return {false, n.name + ": G^(Gamma) is a Groebner basis despite a compound cut"};
    } else {
      ++atomic_only;
      atomic_only_non_gb += all_non_gb;
    }
  }
  return {true, std::to_string(compound) + " nets with compound cuts; also non-GB for " +
                    std::to_string(atomic_only_non_gb) + "/" + std::to_string(atomic_only) +
                    " atomic-cut nets"};
}

Outcome criterion8() {
  std::size_t steps = 0, confluent = 0;
  for (auto& n : corpus()) {
    auto rng = step_rng(n);
    ProofStructure g = n.net;
    while (true) {
      auto rs = find_redexes(g);
      if (rs.empty())
        break;
      const Redex& r = rs[rng() % rs.size()];
      auto rep = check_ts_identities(g, r);
      if (!rep.pass)
        return {false, n.name + ": " + to_line(rep)};
      g = reduce(g, r).result;
      ++steps;
    }
    if (n.net.cut_count() <= 3) {
      auto outs = all_normalizations(n.net);
      if (outs.size() != 1)
        return {false, n.name + ": " + std::to_string(outs.size()) + " distinct outcomes"};
      ++confluent;
    }
  }
  return {true, std::to_string(steps) + " steps checked, " + std::to_string(confluent) +
                    " nets confluent"};
}

Outcome criterion9() {
  for (auto& n : corpus()) {
    auto r = check_goi(n.net);
    if (!r.pass)
      return {false, to_line(r)};
  }
  return {true, std::to_string(corpus().size()) + " nets"};
}

Outcome criterion10() {
  CheckOptions bad;
  bad.ideal.sabotage = true;
  std::ostringstream os;
  bool ok = true;
  for (Suite s : {Suite::Elimination, Suite::Execution, Suite::Intersection, Suite::Goi}) {
    std::size_t fails = 0, mismatches = 0, bare = 0;
    for (auto& n : corpus())
      for (auto& r : run_suite(s, n, kStepSeed, bad)) {
        if (r.pass)
          continue;
        ++fails;
        if (!r.witness || r.witness->empty())
          ++bare;
        else if (r.witness->rfind("error:", 0) != 0)
          ++mismatches;
      }
    bool sok = fails > 0 && mismatches > 0 && bare == 0;
    ok = ok && sok;
    os << (os.tellp() ? "; " : "") << to_string(s) << " " << fails << " fail (" << mismatches
       << " non-error witnesses)";
  }
  return {ok, os.str()};
}

} // namespace

int main() {
  report(1, "canonical detour pipeline", kLimitExample, criterion1);
  report(2, "example graph panels", kLimitExample, criterion2);
  report(3, "Buchberger-ES equals falling roofs", kLimitGraphs, criterion3);
  report(4, "elimination theorem", kLimitCorpus, criterion4);
  report(5, "execution theorem", kLimitCorpus, criterion5);
  report(6, "ideal intersection", kLimitCorpus, criterion6);
  report(7, "Groebner structure of G0 and G^Gamma", kLimitCorpus, criterion7);
  report(8, "T/S contracts and confluence", kLimitCorpus, criterion8);
  report(9, "GoI permutation equals boundary permutation", kLimitCorpus, criterion9);
  report(10, "sabotage is detected", kLimitCorpus, criterion10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
