#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gre/feta.hpp"
#include "gre/json_io.hpp"

namespace gre {

// A rewriting grammar file: named graphs, named rules (optionally with
// application conditions), and optional pathway queries.
struct QuerySpec {
  std::vector<std::string> transitions;
  std::string target;
  int n_max = 2;
  RewriteType type = RewriteType::Dpo;
  std::optional<SizeBound> bound;
  std::optional<int> window_cap;
};

struct GrammarFile {
  std::map<std::string, Graph> graphs;
  std::map<std::string, RuleWithConditions> rules;
  std::map<std::string, QuerySpec> queries;
};

// Parses a grammar; throws Error with a descriptive message on malformed
// content or unresolved references.
GrammarFile grammar_from_json(const json& j);

// Full invariant validation; returns human-readable diagnostics, empty when
// everything checks out.
std::vector<std::string> validate_grammar(const json& j);

// Canonical serialization: sorted names, canonical graph/rule forms.
json to_json(const GrammarFile& g);

// Builds the pathway query named in the grammar. The bound default derives
// from the target rule's input when the file does not pin one.
PathwayQuery build_query(const GrammarFile& g, const std::string& name,
                         std::optional<SizeBound> bound_override = std::nullopt,
                         std::optional<int> nmax_override = std::nullopt);

}  // namespace gre
