#pragma once

#include <optional>
#include <vector>

#include "gre/colimits.hpp"
#include "gre/conditions.hpp"
#include "gre/morphism.hpp"

namespace gre {

enum class RewriteType { Dpo, Sqpo, DpoDagger };

const char* to_string(RewriteType t);

// A linear rule: span of monos O ← K → I. Applying it replaces an instance
// of the input pattern I by the output O, preserving the context K.
struct Rule {
  Graph output;   // O
  Graph context;  // K
  Graph input;    // I
  Morphism to_output;  // K → O, mono
  Morphism to_input;   // K → I, mono

  Span as_span() const { return make_span(to_output, to_input); }
  static Rule from_span(const Span& s);
  static Rule identity_rule(const Graph& g);
  Rule reversed() const;
};

void validate(const Rule& r);

struct RuleIso {
  Morphism on_output, on_context, on_input;
};
std::optional<RuleIso> rule_isomorphic(const Rule& a, const Rule& b);
std::vector<RuleIso> rule_isomorphisms(const Rule& a, const Rule& b);

struct RuleWithConditions {
  Rule rule;
  Condition cond;  // over rule.input

  RuleWithConditions(Rule r, Condition c);
  explicit RuleWithConditions(Rule r);
};

// Rule iso plus transported-condition equivalence up to the bound.
bool rules_with_conditions_isomorphic(const RuleWithConditions& a, const RuleWithConditions& b,
                                      const SizeBound& bound);

// One rule application diagram. The interior D completes both squares:
//
//   O ←—— K ——→ I        (B): pushout       (A): POC (DPO/DPO†) or FPC (SqPO)
//   ↓     ↓     ↓
//   Y ←—— D ——→ X
struct DirectDerivation {
  RuleWithConditions rule;
  RewriteType type = RewriteType::Dpo;
  Graph start;     // X
  Graph interior;  // D
  Graph result;    // Y
  Morphism match;               // I → X
  Morphism comatch;             // O → Y
  Morphism to_interior;         // K → D
  Morphism interior_to_start;   // D → X
  Morphism interior_to_result;  // D → Y
};

// Structural sanity of a derivation: commuting squares, mono legs, and the
// square properties demanded by its type.
void validate(const DirectDerivation& dd);

// All t-admissible matches of R into X that satisfy the application
// condition, in canonical order. t must be Dpo or Sqpo.
std::vector<Morphism> find_matches(const RuleWithConditions& R, const Graph& X, RewriteType t);

bool is_admissible(const RuleWithConditions& R, const Graph& X, const Morphism& m, RewriteType t);

// Applies R at an admissible match; throws NotAdmissible otherwise.
DirectDerivation apply(const RuleWithConditions& R, const Graph& X, const Morphism& m,
                       RewriteType t);

// Reversed application at a comatch O → Y; absent when the pushout complement
// on the output side does not exist. Conditions are not consulted here: the
// composition machinery handles them through Shift/Trans.
std::optional<DirectDerivation> apply_dagger(const RuleWithConditions& R, const Graph& Y,
                                             const Morphism& comatch);

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(const std::string& reason) : Error(reason) {}
};

}  // namespace gre
