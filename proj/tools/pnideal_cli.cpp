#include "pnideal/groebner.hpp"
#include "pnideal/io.hpp"
#include "pnideal/netideal.hpp"
#include "pnideal/reduction.hpp"
#include "pnideal/roofgraph.hpp"
#include "pnideal/sequent.hpp"
#include "pnideal/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace pnideal;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  out << data;
}

struct Loaded {
  ProofStructure net;
  bool from_proof = false;
};

json load_json(const std::string& path) {
  return parse_json_text(read_input(path), path == "-" ? "<stdin>" : path);
}

// proofs are translated, structures are taken as given
Loaded load_any(const std::string& path) {
  json j = load_json(path);
  if (j.is_object() && j.contains("rule"))
    return {translate(sequent_from_json(j)), true};
  if (j.is_object() && j.contains("nodes"))
    return {structure_from_json(j), false};
  throw ParseError(path + ": neither a sequent proof (\"rule\") nor a structure (\"nodes\")");
}

ProofStructure load_net(const std::string& path, bool combine = false) {
  Loaded l = load_any(path);
  if (!l.from_proof) {
    auto v = validate(l.net);
    if (!v.ok) {
      std::string msg = path + ": not a valid proof structure";
      for (auto& d : v.diagnostics)
        msg += "\n  " + d;
      throw ParseError(msg);
    }
  }
  if (combine && l.net.conclusion_edges().size() > 1)
    return combine_conclusions(l.net);
  return l.net;
}

std::vector<std::size_t> parse_trace(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad redex index '" + tok + "' in trace");
    out.push_back(std::stoul(tok));
  }
  return out;
}

struct OrderChoice {
  std::optional<VarOrder> order;
  std::set<AtomVar> survivors; // gamma only
  bool gamma = false;
};

// zero | n | gamma (full normalization) | gamma:i,j,... | none
OrderChoice choose_order(const ProofStructure& g, const std::string& sel) {
  OrderChoice c;
  if (sel == "none")
    return c;
  if (sel == "zero") {
    c.order = order_zero(g);
  } else if (sel == "n") {
    c.order = order_n(g);
  } else if (sel == "gamma" || sel.rfind("gamma:", 0) == 0) {
    NormalizationResult seq =
        sel == "gamma" ? normalize(g) : run_steps(g, parse_trace(sel.substr(6)));
    c.order = order_gamma(g, seq);
    for (auto v : seq.normal.variables())
      c.survivors.insert(seq.map.T(v));
    c.gamma = true;
  } else {
    throw UsageError("unknown order '" + sel + "' (zero, n, gamma, gamma:<i,j,...>, none)");
  }
  return c;
}

json poly_list_json(const std::vector<Polynomial>& ps, const std::optional<VarOrder>& o) {
  json a = json::array();
  for (auto& p : ps)
    a.push_back(o ? p.to_string(*o) : p.to_string());
  return a;
}

json order_json(const VarOrder& o) {
  json a = json::array();
  for (auto v : o.variables())
    a.push_back(to_string(v));
  return a;
}

std::string order_line(const VarOrder& o) {
  std::string s = "# order";
  const auto& vs = o.variables();
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? " < " : " ") + to_string(vs[i]);
  return s + "\n";
}

void check_format(const std::string& f, std::initializer_list<const char*> ok) {
  for (auto k : ok)
    if (f == k)
      return;
  throw UsageError("unsupported format '" + f + "'");
}

int cmd_translate(const std::string& in, const std::string& out) {
  json j = load_json(in);
  if (!j.is_object() || !j.contains("rule"))
    throw ParseError(in + ": expected a sequent proof (object with \"rule\")");
  write_output(out, to_json(translate(sequent_from_json(j))).dump(2) + "\n");
  return kOk;
}

int cmd_validate(const std::string& in, const std::string& format) {
  check_format(format, {"text", "json"});
  Loaded l = load_any(in);
  auto v = validate(l.net);
  if (format == "json") {
    json j{{"valid", v.ok}, {"diagnostics", v.diagnostics}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (v.ok ? "valid" : "invalid") << "\n";
    for (auto& d : v.diagnostics)
      std::cout << "  " << d << "\n";
  }
  return v.ok ? kOk : kFailed;
}

int cmd_reduce(const std::string& in, const std::vector<std::size_t>& redexes, bool norm,
               bool list, const std::string& varmap_out, const std::string& out) {
  ProofStructure g = load_net(in);
  if (list) {
    auto rs = find_redexes(g);
    for (std::size_t i = 0; i < rs.size(); ++i)
      std::cout << i << " " << rs[i].describe() << "\n";
    return kOk;
  }
  if (norm == !redexes.empty())
    throw UsageError("give either --normalize or at least one --redex");
  NormalizationResult r = norm ? normalize(g) : run_steps(g, redexes);
  write_output(out, to_json(r.normal).dump(2) + "\n");
  if (!varmap_out.empty()) {
    json m = to_json(r.map);
    json trace = json::array();
    for (auto& x : r.trace)
      trace.push_back(to_json(x));
    m["trace"] = trace;
    write_output(varmap_out, m.dump(2) + "\n");
  }
  std::cerr << r.trace.size() << " step(s)\n";
  return kOk;
}

int cmd_ideal(const std::string& in, const std::string& order, bool combine,
              const std::string& format) {
  check_format(format, {"text", "json"});
  ProofStructure g = load_net(in, combine);
  OrderChoice c = choose_order(g, order);
  std::vector<Polynomial> gens = c.order ? generator_sequence(g, *c.order)
                                         : link_generators(g).polynomials();
  if (format == "json") {
    json j;
    if (c.order)
      j["order"] = order_json(*c.order);
    j["generators"] = poly_list_json(gens, c.order);
    std::cout << j.dump(2) << "\n";
  } else {
    if (c.order)
      std::cout << order_line(*c.order);
    for (auto& p : gens)
      std::cout << (c.order ? p.to_string(*c.order) : p.to_string()) << "\n";
  }
  return kOk;
}

int cmd_groebner(const std::string& in, const std::string& algo, const std::string& order,
                 bool combine, bool eliminate, bool raw, const std::string& dot,
                 const std::string& format) {
  check_format(format, {"text", "json"});
  if (algo != "std" && algo != "es" && algo != "roofs")
    throw UsageError("unknown algorithm '" + algo + "' (std, es, roofs)");
  if (!dot.empty() && algo != "roofs")
    throw UsageError("--dot needs --algo roofs");
  ProofStructure g = load_net(in, combine);
  OrderChoice c = choose_order(g, order);
  if (!c.order)
    throw UsageError("groebner needs an order");
  if (eliminate && !c.gamma)
    throw UsageError("--eliminate needs a gamma order");
  const VarOrder& o = *c.order;
  std::vector<Polynomial> basis;
  if (algo == "roofs") {
    OrderedGraph n = falling_roofs(sim_graph(g, o));
    if (!dot.empty())
      write_output(dot, to_dot(n, "N"));
    if (eliminate)
      basis = cut_top(n, c.survivors);
    else
      basis = raw ? graph_generators_inserted(n) : graph_generators(n);
  } else {
    auto gens = generator_sequence(g, o);
    Basis b = algo == "es" ? buchberger_es(gens, o) : buchberger_standard(gens, o);
    basis = eliminate ? restrict_to(b.polys, c.survivors) : b.polys;
  }
  if (!raw)
    basis = canonical_set(basis, o);
  if (format == "json") {
    json j{{"algo", algo}, {"order", order_json(o)}, {"basis", poly_list_json(basis, o)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << order_line(o);
    for (auto& p : basis)
      std::cout << p.to_string(o) << "\n";
  }
  return kOk;
}

int cmd_dot(const std::string& in, const std::string& out) {
  write_output(out, to_dot(load_net(in)));
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool sabotage = false;
  unsigned jobs = 1;
  std::string format = "text";
  bool named = false;
  std::vector<std::string> nets;
  CorpusLimits limits;
};

int cmd_verify(const VerifyArgs& a) {
  check_format(a.format, {"text", "json"});
  std::vector<Suite> suites;
  if (a.suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(a.suite)) {
    suites = {*s};
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  std::vector<NamedNet> nets;
  if (a.named)
    nets = named_nets();
  for (auto& path : a.nets)
    nets.push_back({path, load_net(path, true)});
  if (a.count) {
    auto rc = random_corpus(a.seed, a.count, a.limits);
    nets.insert(nets.end(), rc.begin(), rc.end());
  }
  CheckOptions opts;
  opts.ideal.sabotage = a.sabotage;

  std::vector<std::vector<TheoremReport>> results(nets.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < nets.size();)
      for (Suite s : suites) {
        auto rs = run_suite(s, nets[i], a.seed, opts);
        results[i].insert(results[i].end(), rs.begin(), rs.end());
      }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(nets.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t)
    pool.emplace_back(work);
  work();
  for (auto& t : pool)
    t.join();

  std::size_t total = 0, failed = 0, vacuous = 0;
  for (auto& rs : results)
    for (auto& r : rs) {
      ++total;
      failed += !r.pass;
      vacuous += r.vacuous;
      if (a.format == "json")
        std::cout << to_json(r).dump() << "\n";
      else
        std::cout << to_line(r) << "\n";
    }
  std::cerr << total << " checks, " << failed << " failed, " << vacuous << " vacuous\n";
  if (total == 0)
    std::cerr << "nothing to check (vacuous pass)\n";
  return failed ? kFailed : kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof nets and their defining ideals"};
  app.require_subcommand(1);

  std::string in, out, format = "text", order = "zero", algo = "es", dot, varmap;
  bool combine = false, eliminate = false, raw = false, norm = false, list = false;
  std::vector<std::size_t> redexes;

  auto* translate_cmd = app.add_subcommand("translate", "sequent proof JSON to structure JSON");
  translate_cmd->add_option("input", in, "proof file ('-' for stdin)")->required();
  translate_cmd->add_option("-o,--output", out, "output file");

  auto* validate_cmd = app.add_subcommand("validate", "check a structure or proof");
  validate_cmd->add_option("input", in)->required();
  validate_cmd->add_option("--format", format, "text|json");

  auto* reduce_cmd = app.add_subcommand("reduce", "cut reduction");
  reduce_cmd->add_option("input", in)->required();
  reduce_cmd->add_option("--redex", redexes, "redex index (repeatable, applied in order)");
  reduce_cmd->add_flag("--normalize", norm, "reduce to normal form");
  reduce_cmd->add_flag("--list", list, "list redexes and exit");
  reduce_cmd->add_option("--varmap", varmap, "write the composite T/S maps here");
  reduce_cmd->add_option("-o,--output", out);

  auto* ideal_cmd = app.add_subcommand("ideal", "generators of the net's ideal");
  ideal_cmd->add_option("input", in)->required();
  ideal_cmd->add_option("--order", order, "zero|n|gamma|gamma:<i,j,...>|none");
  ideal_cmd->add_flag("--combine", combine, "par together several conclusions");
  ideal_cmd->add_option("--format", format, "text|json");

  auto* gb_cmd = app.add_subcommand("groebner", "Groebner basis of the net's ideal");
  gb_cmd->add_option("input", in)->required();
  gb_cmd->add_option("--algo", algo, "std|es|roofs");
  gb_cmd->add_option("--order", order, "zero|n|gamma|gamma:<i,j,...>");
  gb_cmd->add_flag("--combine", combine);
  gb_cmd->add_flag("--eliminate", eliminate, "keep only polynomials in surviving variables");
  gb_cmd->add_flag("--raw", raw, "append order, no monic normalization");
  gb_cmd->add_option("--dot", dot, "write the final roof graph as DOT");
  gb_cmd->add_option("--format", format, "text|json");

  auto* dot_cmd = app.add_subcommand("dot", "structure as DOT");
  dot_cmd->add_option("input", in)->required();
  dot_cmd->add_option("-o,--output", out);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run theorem suites on random nets");
  verify_cmd->add_option("--suite", va.suite, "intersection|elimination|execution|goi|ts|all");
  verify_cmd->add_option("--seed", va.seed);
  verify_cmd->add_option("--count", va.count, "random nets");
  verify_cmd->add_flag("--sabotage", va.sabotage, "mis-pair one axiom generator");
  verify_cmd->add_option("--jobs", va.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", va.format, "text|json");
  verify_cmd->add_flag("--named", va.named, "also check the built-in example nets");
  verify_cmd->add_option("--net", va.nets, "also check this file (repeatable)");
  verify_cmd->add_option("--max-rules", va.limits.max_rules)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-cuts", va.limits.max_cuts)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-vars", va.limits.max_vars)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*translate_cmd)
      return cmd_translate(in, out);
    if (*validate_cmd)
      return cmd_validate(in, format);
    if (*reduce_cmd)
      return cmd_reduce(in, redexes, norm, list, varmap, out);
    if (*ideal_cmd)
      return cmd_ideal(in, order, combine, format);
    if (*gb_cmd)
      return cmd_groebner(in, algo, order, combine, eliminate, raw, dot, format);
    if (*dot_cmd)
      return cmd_dot(in, out);
    if (*verify_cmd)
      return cmd_verify(va);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
