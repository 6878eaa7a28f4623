#pragma once

#include "pnideal/proof_structure.hpp"
#include "pnideal/reduction.hpp"
#include "pnideal/sequent.hpp"

#include <json.hpp>

#include <string>

namespace pnideal {

using json = nlohmann::ordered_json;

json to_json(const ProofStructure& g);
// no validation beyond the schema
ProofStructure structure_from_json(const json& j);

json to_json(const SequentProof& p);
SequentProof sequent_from_json(const json& j);

json to_json(const VarMap& m);
json to_json(const Redex& r);

// parse text into json, reporting line and column on failure
json parse_json_text(const std::string& text, const std::string& source_name);

std::string to_dot(const ProofStructure& g, const std::string& name = "net");

} // namespace pnideal
