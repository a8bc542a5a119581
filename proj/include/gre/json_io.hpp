#pragma once

#include <string>

#include "json.hpp"

#include "gre/tracelets.hpp"

namespace gre {

using nlohmann::json;

json to_json(const Graph& g);
json to_json(const Morphism& m);  // maps only; endpoints implied by context
json to_json(const Condition& c);
json to_json(const Rule& r);
json to_json(const RuleWithConditions& r);
json to_json(const DirectDerivation& dd);
json to_json(const Tracelet& t);
json to_json(const DerivationTrace& tr);

Graph graph_from_json(const json& j);
Morphism morphism_from_json(const Graph& dom, const Graph& cod, const json& j);
Condition condition_from_json(const Graph& root, const json& j);
RuleWithConditions rule_from_json(const json& j);

RewriteType rewrite_type_from_string(const std::string& s);

// Canonical serialized form; the lexicographic order on these strings picks
// quotient representatives.
std::string canonical_key(const Tracelet& t);

}  // namespace gre
