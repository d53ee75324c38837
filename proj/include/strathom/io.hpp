#pragma once

#include "strathom/pairing.hpp"
#include "strathom/reduce.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace strathom {

using Json = nlohmann::ordered_json;

Json to_json(const Poset& P);
Poset poset_from_json(const Json& j);

// .fss.json. Writing what was read reproduces the input byte for byte (given our formatting).
Json to_json(const SSet& X);
SSet sset_from_json(const Json& j);

Json map_to_json(const SSet& X, const SSet& Y, const SMap& f);
SMap map_from_json(const Json& j, const SSet& X, const SSet& Y);

// Certificates carry "base" in addition to the typeII/T/k tables, so improper inputs survive.
Json pairing_to_json(const SSet& B, const Pairing& p);
Pairing pairing_from_json(const Json& j, const SSet& B);
Json presentation_to_json(const SSet& B, const Presentation& a);
Presentation presentation_from_json(const Json& j, const SSet& B);

Json to_json(const MoveRecord& m, const Poset& P);
MoveRecord move_from_json(const Json& j, const Poset& P);

Json to_json(const Deformation& d);
Deformation deformation_from_json(const Json& j);

Json to_json(const std::vector<Diagnostic>& diags);
Json to_json(const ReduceReport& r);

// "-" is stdin / stdout. Malformed JSON raises a parse error.
Json read_json(const std::string& path);
void write_json(const Json& j, const std::string& path);
std::string dump(const Json& j);

}  // namespace strathom
