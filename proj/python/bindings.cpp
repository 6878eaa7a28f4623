#include "pnideal/groebner.hpp"
#include "pnideal/io.hpp"
#include "pnideal/netideal.hpp"
#include "pnideal/reduction.hpp"
#include "pnideal/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pnideal;

namespace {

std::vector<std::string> names(const std::vector<AtomVar>& vs) {
  std::vector<std::string> out;
  for (auto v : vs)
    out.push_back(to_string(v));
  return out;
}

std::vector<std::string> strs(const std::vector<Polynomial>& ps, const VarOrder& o) {
  std::vector<std::string> out;
  for (auto& p : ps)
    out.push_back(p.to_string(o));
  return out;
}

VarOrder parse_order(const std::vector<std::string>& vs) {
  std::vector<AtomVar> out;
  for (auto& s : vs)
    out.push_back(parse_atom_var(s));
  return VarOrder(std::move(out));
}

std::vector<Polynomial> parse_polys(const std::vector<std::string>& ps) {
  std::vector<Polynomial> out;
  for (auto& s : ps)
    out.push_back(parse_polynomial(s));
  return out;
}

VarOrder pick_order(const ProofStructure& g, const std::string& sel) {
  if (sel == "zero")
    return order_zero(g);
  if (sel == "n")
    return order_n(g);
  if (sel == "gamma")
    return order_gamma(g, normalize(g));
  throw Error("unknown order '" + sel + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "proof nets, their ideals and Groebner bases";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<ProofStructure>(m, "Net")
      .def_static("from_json",
                  [](const std::string& s) { return structure_from_json(json::parse(s)); })
      .def("to_json", [](const ProofStructure& g) { return to_json(g).dump(); })
      .def("to_dot", [](const ProofStructure& g) { return to_dot(g); })
      .def("validate",
           [](const ProofStructure& g) {
             auto v = validate(g);
             return py::make_tuple(v.ok, v.diagnostics);
           })
      .def_property_readonly("cut_count", &ProofStructure::cut_count)
      .def("variables", [](const ProofStructure& g) { return names(g.variables()); })
      .def("conclusions",
           [](const ProofStructure& g) {
             std::vector<std::string> out;
             for (EdgeId e : g.conclusion_edges())
               out.push_back(g.edge(e).formula.to_string());
             return out;
           })
      .def("combine", &combine_conclusions)
      .def("redexes",
           [](const ProofStructure& g) {
             std::vector<std::string> out;
             for (auto& r : find_redexes(g))
               out.push_back(r.describe());
             return out;
           })
      .def("reduce",
           [](const ProofStructure& g, std::size_t i) { return run_steps(g, {i}).normal; })
      .def("normalize",
           [](const ProofStructure& g) {
             auto r = normalize(g);
             std::map<std::string, std::string> t;
             for (auto& [a, b] : r.map.t)
               t[to_string(a)] = to_string(b);
             return py::make_tuple(r.normal, t);
           })
      .def("order", [](const ProofStructure& g,
                       const std::string& sel) { return names(pick_order(g, sel).variables()); },
           py::arg("order") = "zero")
      .def("ideal",
           [](const ProofStructure& g, const std::string& sel) {
             VarOrder o = pick_order(g, sel);
             return strs(generator_sequence(g, o), o);
           },
           py::arg("order") = "zero")
      .def("boundary_sigma", [](const ProofStructure& g) { return boundary(g).sigma; });

  m.def("parse_formula", [](const std::string& s) { return parse_formula(s).to_string(); });
  m.def("translate",
        [](const std::string& s) { return translate(sequent_from_json(json::parse(s))); });
  m.def("smallest_net", &smallest_net);
  m.def("lambda_net", &lambda_net);
  m.def("detour_net", &detour_net);
  m.def(
      "random_net",
      [](std::uint64_t seed, std::size_t max_rules) {
        return translate(random_net(seed, max_rules));
      },
      py::arg("seed"), py::arg("max_rules") = 16);

  m.def(
      "groebner",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& order,
         const std::string& algo) {
        VarOrder o = parse_order(order);
        auto F = parse_polys(polys);
        Basis b = algo == "es"    ? buchberger_es(F, o)
                  : algo == "std" ? buchberger_standard(F, o)
                                  : throw Error("unknown algorithm '" + algo + "'");
        return strs(canonical_set(b.polys, o), o);
      },
      py::arg("polys"), py::arg("order"), py::arg("algo") = "std");
  m.def(
      "reduced_groebner",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& order) {
        VarOrder o = parse_order(order);
        auto F = parse_polys(polys);
        Basis r = reduced_basis(buchberger_standard(F, o));
        return strs(canonical_set(r.polys, o), o);
      },
      py::arg("polys"), py::arg("order"));

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t count, bool sabotage) {
        std::vector<Suite> suites;
        if (suite == "all")
          suites = all_suites();
        else if (auto s = parse_suite(suite))
          suites = {*s};
        else
          throw Error("unknown suite '" + suite + "'");
        CheckOptions opts;
        opts.ideal.sabotage = sabotage;
        std::vector<py::dict> out;
        for (auto& n : random_corpus(seed, count))
          for (Suite s : suites)
            for (auto& r : run_suite(s, n, seed, opts)) {
              py::dict d;
              d["theorem"] = r.theorem;
              d["net"] = r.net;
              d["pass"] = r.pass;
              d["vacuous"] = r.vacuous;
              d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::none();
              out.push_back(d);
            }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = 1, py::arg("count") = 10,
      py::arg("sabotage") = false);
}
