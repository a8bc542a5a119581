#pragma once

#include <optional>
#include <vector>

#include "gre/composition.hpp"

namespace gre {

// A chained sequence of direct derivations from a start object.
struct DerivationTrace {
  Graph start;
  std::vector<DirectDerivation> steps;

  const Graph& result() const { return steps.empty() ? start : steps.back().result; }
  std::size_t length() const { return steps.size(); }
};

void validate(const DerivationTrace& tr);

// A tracelet: a minimal derivation trace stored column-wise, together with
// the composite application condition over its input object. Column j is a
// derivation of rule R_j whose start/result objects are the interface
// objects Y_{j,j-1} / Y_{j+1,j}; adjacent columns share them by value.
struct Tracelet {
  RewriteType type = RewriteType::Dpo;
  std::vector<DirectDerivation> columns;
  Condition cond;  // over input()

  std::size_t length() const { return columns.size(); }
  const Graph& input() const { return columns.front().start; }
  const Graph& output() const { return columns.back().result; }
  const DirectDerivation& column(int j) const { return columns.at(j - 1); }  // 1-based

  DerivationTrace as_trace() const { return DerivationTrace{input(), columns}; }
};

void validate(const Tracelet& t);

// The interface span (Y_out ← D → Y_in) under a derivation column.
Span interface_span(const DirectDerivation& column);

Tracelet tracelet_of_rule(const RuleWithConditions& R, RewriteType t);

// Tracelet evaluation [[·]]: the pullback-composed span of the interface
// row, paired with the stored condition.
RuleWithConditions evaluate(const Tracelet& T);

// Composition of T2 after T1 along an admissible overlap μ = (I2 ← M → O1)
// between T2's input and T1's output. Carries the gluing data needed by the
// characterization machinery.
struct TraceletComposeResult {
  Tracelet tracelet;
  Graph glued;  // N = PO(μ)
  Morphism n2;  // T2.input → N
  Morphism n1;  // T1.output → N
  // Row embeddings: old interface objects into the new bottom row.
  std::vector<Morphism> first_row;   // size n+1, [j]: T1.Y_{j+1,j} → Z_{j+1,j}
  std::vector<Morphism> second_row;  // size m+1, [i]: T2.Y_{i+1,i} → Z_{n+i+1,n+i}
  // Raw interior embeddings, before pasting with the rule rows.
  std::vector<Morphism> first_interiors;   // [j]: T1.columns[j].interior → new interior
  std::vector<Morphism> second_interiors;  // [i]: T2.columns[i].interior → new interior
};

std::optional<TraceletComposeResult> try_compose_tracelets(const Tracelet& T2, const Span& mu,
                                                           const Tracelet& T1);
Tracelet compose_tracelets(const Tracelet& T2, const Span& mu, const Tracelet& T1);

// Admissible tracelet matches; computed both at the tracelet level and at the
// evaluation (rule) level, cross-checked, and returned in canonical order.
std::vector<Span> enumerate_tracelet_matches(const Tracelet& T2, const Tracelet& T1,
                                             const SizeBound& bound,
                                             CondDiagnostics* diag = nullptr);

// Unrolls T into an n-step trace at a composite-rule match m: input → X0.
DerivationTrace apply_tracelet(const Tracelet& T, const Graph& X0, const Morphism& m);

struct TraceletWithMatch {
  Tracelet tracelet;
  Morphism match;  // input → trace start
  // Interface row embedded into the trace row: [j]: Y_{j+1,j} → X_j.
  std::vector<Morphism> row_embeddings;
};

// Characterization converse: the unique minimal tracelet and match encoding
// a given derivation trace, built by inductive concurrency synthesis.
TraceletWithMatch tracelet_from_trace(const DerivationTrace& tr);

// Tracelet surgery on the window of columns [j-k, j] (1-based, k ≥ 0): the
// window re-composed as a tracelet of length k+1 plus the collapsed column
// spanning the window inside T's own interface row.
struct SurgeryResult {
  DirectDerivation collapsed;
  TraceletWithMatch window;
};
SurgeryResult surgery(const Tracelet& T, int j, int k);

// T with the window columns replaced by the single collapsed column.
DerivationTrace collapse_window(const Tracelet& T, int j, int k);

struct EquivConfig {
  SizeBound bound{4, 4, 2};
  int window_cap = 2;            // windows span up to window_cap+1 columns
  int swap_depth = 4;            // BFS depth over shift steps in pathway search
  std::size_t swap_breadth = 64; // visited cap for that BFS
  bool check_conditions = true;
};

// Object-wise iso family transforming one trace diagram into the other,
// commuting with every morphism; rule conditions are compared when asked.
bool diagram_isomorphic(const DerivationTrace& a, const DerivationTrace& b,
                        const EquivConfig& cfg);

bool abstraction_equivalent(const Tracelet& a, const Tracelet& b, const EquivConfig& cfg);

// All isos a.input() → b.input() that extend to a full diagram-iso family;
// empty when the tracelets are not abstraction equivalent. Used to compare
// (tracelet, match) pairs.
std::vector<Morphism> abstraction_witnesses(const Tracelet& a, const Tracelet& b,
                                            const EquivConfig& cfg);

// One shift step: some window with permuted-isomorphic rule content and
// isomorphic collapsed diagrams. The structural verdict ignores conditions.
struct ShiftVerdict {
  bool structural = false;
  bool with_conditions = false;
};
ShiftVerdict shift_equivalent_detail(const Tracelet& a, const Tracelet& b,
                                     const EquivConfig& cfg);
bool shift_equivalent(const Tracelet& a, const Tracelet& b, const EquivConfig& cfg);

}  // namespace gre
