#include "pnideal/io.hpp"

#include "pnideal/error.hpp"

#include <sstream>

namespace pnideal {

json to_json(const ProofStructure& g) {
  json j;
  j["nodes"] = json::array();
  for (auto& [id, n] : g.nodes())
    j["nodes"].push_back({{"id", id}, {"kind", to_string(n.kind)}});
  j["edges"] = json::array();
  for (auto& [id, e] : g.edges())
    j["edges"].push_back({{"id", id},
                          {"src", e.src},
                          {"dst", e.dst},
                          {"formula", e.formula.to_string()},
                          {"pos", to_string(e.pos)}});
  return j;
}

namespace {

template <class T> T field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

} // namespace

ProofStructure structure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") ||
      !j["nodes"].is_array() || !j["edges"].is_array())
    throw ParseError("structure: expected an object with 'nodes' and 'edges' arrays");
  ProofStructure g;
  std::size_t k = 0;
  for (auto& n : j["nodes"]) {
    std::string where = "nodes[" + std::to_string(k++) + "]";
    try {
      g.add_node(Node{field<int>(n, "id", where),
                      parse_node_kind(field<std::string>(n, "kind", where))});
    } catch (const StructureError& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).find(where) == 0 ? e.what()
                                                               : where + ": " + e.what());
    }
  }
  k = 0;
  for (auto& e : j["edges"]) {
    std::string where = "edges[" + std::to_string(k++) + "]";
    try {
      std::string pos = e.contains("pos") ? field<std::string>(e, "pos", where) : "only";
      g.add_edge(Edge{field<int>(e, "id", where), field<int>(e, "src", where),
                      field<int>(e, "dst", where),
                      parse_formula(field<std::string>(e, "formula", where)),
                      parse_premise_pos(pos)});
    } catch (const StructureError& ex) {
      throw ParseError(where + ": " + ex.what());
    } catch (const ParseError& ex) {
      throw ParseError(std::string(ex.what()).find(where) == 0 ? ex.what()
                                                                : where + ": " + ex.what());
    }
  }
  return g;
}

json to_json(const SequentProof& p) {
  json j;
  j["rule"] = to_string(p.rule);
  if (p.formula)
    j["formula"] = p.formula->to_string();
  if (!p.children.empty()) {
    j["children"] = json::array();
    for (auto& c : p.children)
      j["children"].push_back(to_json(c));
  }
  j["occ"] = p.occ;
  return j;
}

namespace {

SequentProof sequent_at(const json& j, const std::string& where) {
  if (!j.is_object())
    throw ParseError(where + ": expected an object");
  std::string rule = field<std::string>(j, "rule", where);
  SequentProof p;
  if (rule == "ax")
    p.rule = Rule::Axiom;
  else if (rule == "cut")
    p.rule = Rule::Cut;
  else if (rule == "tensor")
    p.rule = Rule::Tensor;
  else if (rule == "par")
    p.rule = Rule::Par;
  else
    throw ParseError(where + ": unknown rule '" + rule + "'");
  if (j.contains("formula")) {
    try {
      p.formula = parse_formula(field<std::string>(j, "formula", where));
    } catch (const ParseError& e) {
      throw ParseError(where + " (" + rule + "): " + e.what());
    }
  }
  if (j.contains("occ")) {
    if (!j["occ"].is_array())
      throw ParseError(where + " (" + rule + "): 'occ' must be an array");
    for (auto& o : j["occ"]) {
      if (!o.is_number_unsigned())
        throw ParseError(where + " (" + rule + "): occurrence indices must be nonnegative integers");
      p.occ.push_back(o.get<std::size_t>());
    }
  }
  if (j.contains("children")) {
    if (!j["children"].is_array())
      throw ParseError(where + " (" + rule + "): 'children' must be an array");
    std::size_t k = 0;
    for (auto& c : j["children"]) {
      p.children.push_back(sequent_at(c, where + "/" + rule + "[" + std::to_string(k) + "]"));
      ++k;
    }
  }
  return p;
}

} // namespace

SequentProof sequent_from_json(const json& j) { return sequent_at(j, "proof"); }

json to_json(const VarMap& m) {
  json j;
  j["T"] = json::array();
  for (auto& [a, b] : m.t)
    j["T"].push_back({to_string(a), to_string(b)});
  j["S"] = json::array();
  for (auto& [a, b] : m.s)
    j["S"].push_back({to_string(a), to_string(b)});
  return j;
}

json to_json(const Redex& r) {
  json j;
  j["kind"] = r.kind == RedexKind::A ? "a" : "m";
  j["cut"] = r.cut;
  j["nodes"] = r.node_ids();
  j["edges"] = r.edge_ids();
  return j;
}

json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source_name + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON");
  }
}

std::string to_dot(const ProofStructure& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (auto& [id, n] : g.nodes()) {
    const char* shape = "box";
    std::string label = to_string(n.kind);
    switch (n.kind) {
    case NodeKind::Axiom: shape = "invtrapezium"; break;
    case NodeKind::Cut: shape = "trapezium"; break;
    case NodeKind::Tensor: shape = "circle"; label = "*"; break;
    case NodeKind::Par: shape = "circle"; label = "|"; break;
    case NodeKind::Conclusion: shape = "plaintext"; label = "c"; break;
    }
    os << "  n" << id << " [shape=" << shape << ", label=\"" << label << "\"];\n";
  }
  for (auto& [id, e] : g.edges()) {
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.formula.to_string() << "\"";
    if (e.pos != PremisePos::Only)
      os << ", headlabel=\"" << (e.pos == PremisePos::Left ? "l" : "r") << "\"";
    os << ", id=\"e" << id << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace pnideal
