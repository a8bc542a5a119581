#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "gre/rules.hpp"

namespace gre {

// Diagnostics shared by the bounded condition checks buried in composition
// and pathway search: counts verdicts that exhausted their bound.
struct CondDiagnostics {
  std::atomic<int> inconclusive{0};
};

// The full concurrent composition diagram of R2 after R1 along an overlap
// μ21 = (I2 ← M → O1):
//
//   O2 ← K2 → I2          O1 ← K1 → I1
//    ↓    ↓    ↓ n2    n1 ↓    ↓    ↓
//   O21 ← K̄2 → N21 ←——— K̄1 ———→ I21
//
// The left column is a t-type derivation of r2 at n2, the right a DPO†-type
// derivation of r1 at n1, and the composite rule is the pullback composition
// of the two bottom spans.
struct RuleComposite {
  RewriteType type = RewriteType::Dpo;
  Span overlap;     // μ21, left: M→I2, right: M→O1
  Graph glued;      // N21
  Morphism n2;      // I2 → N21
  Morphism n1;      // O1 → N21
  DirectDerivation forward;   // r2 at n2 (type t): N21 ⇒ O21
  DirectDerivation backward;  // r1 at comatch n1 (DPO†): I21 ⇒ N21
  Rule composite;             // O21 ← K21 → I21
  Morphism k_to_forward;      // K21 → K̄2
  Morphism k_to_backward;     // K21 → K̄1
  Condition cond;             // c_{I21} over I21

  RuleWithConditions rule() const { return RuleWithConditions(composite, cond); }
  const Morphism& input1_embedding() const { return backward.match; }   // I1 → I21
  const Morphism& output2_embedding() const { return forward.comatch; } // O2 → O21
};

// Structural composition along μ; nullopt when a required POC/FPC does not
// exist. The composite condition is computed but not tested for falsity.
std::optional<RuleComposite> try_compose_rules(const RuleWithConditions& R2, const Span& mu,
                                               const RuleWithConditions& R1, RewriteType t);

// Like try_compose_rules but faults on structural inadmissibility.
RuleComposite compose_rules(const RuleWithConditions& R2, const Span& mu,
                            const RuleWithConditions& R1, RewriteType t);

// All admissible overlaps μ21 = (I2 ← M → O1), up to span isomorphism, in
// canonical order: both induced matches admissible in their type and the
// composite condition not bounded-false.
std::vector<Span> enumerate_rule_matches(const RuleWithConditions& R2,
                                         const RuleWithConditions& R1, RewriteType t,
                                         const SizeBound& bound,
                                         CondDiagnostics* diag = nullptr);

// Concurrency theorem, synthesis direction: from a two-step derivation
// (m1 applied first, then m2 on its result) to (μ21, m21).
struct SynthesisResult {
  Span overlap;             // μ21
  Morphism composite_match; // m21: I21 → X0
  RuleComposite composite;
};
SynthesisResult concurrency_synthesis(const Morphism& m2, const Morphism& m1,
                                      const RuleWithConditions& R2, const RuleWithConditions& R1,
                                      RewriteType t);

// Concurrency theorem, analysis direction: from (μ21, m21) back to the
// sequential matches, together with the realized two-step derivation.
struct AnalysisResult {
  Morphism m2;  // I2 → X1
  Morphism m1;  // I1 → X0
  DirectDerivation first;   // r1 at m1
  DirectDerivation second;  // r2 at m2
};
AnalysisResult concurrency_analysis(const Span& mu, const Morphism& composite_match,
                                    const RuleWithConditions& R2, const RuleWithConditions& R1,
                                    RewriteType t);

// Traditional sequential independence of two chained derivations: residual
// monos through the interiors in both directions.
bool sequentially_independent(const DirectDerivation& dd2, const DirectDerivation& dd1);

// Compositional variant, read off the composition diagram alone.
bool compositional_independence(const RuleComposite& comp);

// Concurrent commutativity: for an independent overlap, the switched overlap
// μ12 with all four composite variants isomorphic and the amalgamated-rule
// pushout shape; flags whether the two composite conditions agree up to the
// bound.
struct SwitchResult {
  Span mu12;  // (I1 ← M → O2)
  RuleComposite swapped;  // R1 after R2 along mu12 (same type)
  bool composites_isomorphic = false;
  bool amalgamated = false;
  bool conditions_equivalent = false;
};
std::optional<SwitchResult> switch_match(const Span& mu21, const RuleWithConditions& R2,
                                         const RuleWithConditions& R1, RewriteType t,
                                         const SizeBound& bound);

}  // namespace gre
