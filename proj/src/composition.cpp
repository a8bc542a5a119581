#include "gre/composition.hpp"

#include "gre/match.hpp"
#include "gre/parallel.hpp"

namespace gre {

namespace {

void validate_overlap(const Span& mu, const RuleWithConditions& R2,
                      const RuleWithConditions& R1) {
  if (!(mu.left.cod() == R2.rule.input))
    throw Error("overlap: left foot must land in the input of the second rule");
  if (!(mu.right.cod() == R1.rule.output))
    throw Error("overlap: right foot must land in the output of the first rule");
  if (!mu.left.is_mono() || !mu.right.is_mono()) throw Error("overlap legs must be mono");
}

}  // namespace

std::optional<RuleComposite> try_compose_rules(const RuleWithConditions& R2, const Span& mu,
                                               const RuleWithConditions& R1, RewriteType t) {
  if (t != RewriteType::Dpo && t != RewriteType::Sqpo)
    throw Error("compose_rules: type must be dpo or sqpo");
  validate_overlap(mu, R2, R1);

  PushoutResult po = pushout(mu);
  const Graph& n_obj = po.object;
  const Morphism& n2 = po.left;   // I2 → N21
  const Morphism& n1 = po.right;  // O1 → N21

  // DPO†-type derivation of r1 at the comatch n1.
  RuleWithConditions r1_plain(R1.rule);
  auto backward = apply_dagger(r1_plain, n_obj, n1);
  if (!backward) return std::nullopt;

  // t-type derivation of r2 at n2; conditions enter only via Shift/Trans.
  RuleWithConditions r2_plain(R2.rule);
  if (t == RewriteType::Dpo && !pushout_complement(R2.rule.to_input, n2)) return std::nullopt;
  DirectDerivation forward = apply(r2_plain, n_obj, n2, t);

  // Composite span via pullback of (K̄2 → N21 ← K̄1).
  PullbackResult pb =
      pullback(make_cospan(forward.interior_to_start, backward->interior_to_result));
  Rule composite{forward.result, pb.apex, backward->start,
                 compose(forward.interior_to_result, pb.left),
                 compose(backward->interior_to_start, pb.right)};
  validate(composite);

  Condition cond = Condition::truth(composite.input);
  if (!R1.cond.is_true() || !R2.cond.is_true()) {
    Rule span_n_i21{n_obj, backward->interior, backward->start, backward->interior_to_result,
                    backward->interior_to_start};
    cond = simplify(Condition::conjunction(
        composite.input,
        {shift(backward->match, R1.cond), trans(span_n_i21, shift(n2, R2.cond))}));
  }

  return RuleComposite{t,        mu,        n_obj,    n2,
                       n1,       forward,   *backward, composite,
                       pb.left,  pb.right,  cond};
}

RuleComposite compose_rules(const RuleWithConditions& R2, const Span& mu,
                            const RuleWithConditions& R1, RewriteType t) {
  auto comp = try_compose_rules(R2, mu, R1, t);
  if (!comp) throw NotAdmissible("rule composition: required pushout complement does not exist");
  return std::move(*comp);
}

std::vector<Span> enumerate_rule_matches(const RuleWithConditions& R2,
                                         const RuleWithConditions& R1, RewriteType t,
                                         const SizeBound& bound, CondDiagnostics* diag) {
  std::vector<Span> candidates;
  for (const Graph& m : enumerate_subgraphs(R2.rule.input)) {
    Morphism into_i2 = inclusion(m, R2.rule.input);
    for (const Morphism& g : enumerate_monos(m, R1.rule.output))
      candidates.push_back(make_span(into_i2, g));
  }
  return par::parallel_filter(candidates, [&](const Span& mu) {
    auto comp = try_compose_rules(R2, mu, R1, t);
    if (!comp) return false;
    if (comp->cond.is_true()) return true;
    BoundedVerdict verdict = not_false_bounded(comp->cond, bound);
    if (!verdict.conclusive && diag) diag->inconclusive.fetch_add(1, std::memory_order_relaxed);
    return verdict.value;
  });
}

SynthesisResult concurrency_synthesis(const Morphism& m2, const Morphism& m1,
                                      const RuleWithConditions& R2, const RuleWithConditions& R1,
                                      RewriteType t) {
  DirectDerivation dd1 = apply(R1, m1.cod(), m1, t);
  if (!(m2.cod() == dd1.result))
    throw Error("concurrency_synthesis: second match must land in the first result");
  if (!is_admissible(R2, dd1.result, m2, t))
    throw NotAdmissible("concurrency_synthesis: second match is not admissible");

  PullbackResult pb = pullback(make_cospan(m2, dd1.comatch));
  Span mu = make_span(pb.left, pb.right);

  auto comp = try_compose_rules(R2, mu, R1, t);
  if (!comp)
    throw Error("concurrency_synthesis: derived overlap unexpectedly inadmissible");

  // Mediate N21 into X1, then factor the backward interior into the
  // first step's interior to land the composite match in X0.
  auto omega = pushout_mediate(mu, PushoutResult{comp->glued, comp->n2, comp->n1}, m2, dd1.comatch);
  if (!omega || !omega->is_mono())
    throw Error("concurrency_synthesis: glued object does not embed into the mid object");

  auto u = factor_through_mono(compose(*omega, comp->backward.interior_to_result),
                               dd1.interior_to_result);
  if (!u) throw Error("concurrency_synthesis: backward interior does not restrict");

  Span i21_span = make_span(R1.rule.to_input, comp->backward.to_interior);
  PushoutResult i21_po{comp->backward.start, comp->backward.match,
                       comp->backward.interior_to_start};
  auto m21 = pushout_mediate(i21_span, i21_po, m1, compose(dd1.interior_to_start, *u));
  if (!m21 || !m21->is_mono())
    throw Error("concurrency_synthesis: composite match construction failed");

  return SynthesisResult{mu, *m21, std::move(*comp)};
}

AnalysisResult concurrency_analysis(const Span& mu, const Morphism& composite_match,
                                    const RuleWithConditions& R2, const RuleWithConditions& R1,
                                    RewriteType t) {
  RuleComposite comp = compose_rules(R2, mu, R1, t);
  if (!(composite_match.dom() == comp.composite.input))
    throw Error("concurrency_analysis: match domain is not the composite input");
  if (!is_admissible(comp.rule(), composite_match.cod(), composite_match, t))
    throw NotAdmissible("concurrency_analysis: composite match is not admissible");

  Morphism m1 = compose(composite_match, comp.input1_embedding());
  DirectDerivation dd1 = apply(R1, m1.cod(), m1, t);

  auto u = factor_through_mono(compose(composite_match, comp.backward.interior_to_start),
                               dd1.interior_to_start);
  if (!u) throw Error("concurrency_analysis: backward interior does not restrict");

  // Assemble ω: N21 → X1 from the two covering pieces.
  const Morphism& j1 = comp.backward.interior_to_result;  // K̄1 → N21
  Morphism to_x1 = compose(dd1.interior_to_result, *u);   // K̄1 → X1
  std::map<Id, Id> vm, em;
  for (const auto& [k, n] : j1.vmap()) vm[n] = to_x1.v(k);
  for (const auto& [k, n] : j1.emap()) em[n] = to_x1.e(k);
  for (const auto& [o, n] : comp.n1.vmap()) {
    Id want = dd1.comatch.v(o);
    auto it = vm.find(n);
    if (it != vm.end() && it->second != want)
      throw Error("concurrency_analysis: glued embedding is inconsistent");
    vm[n] = want;
  }
  for (const auto& [o, n] : comp.n1.emap()) {
    Id want = dd1.comatch.e(o);
    auto it = em.find(n);
    if (it != em.end() && it->second != want)
      throw Error("concurrency_analysis: glued embedding is inconsistent");
    em[n] = want;
  }
  Morphism omega(comp.glued, dd1.result, std::move(vm), std::move(em));
  if (!omega.is_mono()) throw Error("concurrency_analysis: glued embedding not mono");

  Morphism m2 = compose(omega, comp.n2);
  DirectDerivation dd2 = apply(R2, dd1.result, m2, t);
  return AnalysisResult{m2, m1, std::move(dd1), std::move(dd2)};
}

bool sequentially_independent(const DirectDerivation& dd2, const DirectDerivation& dd1) {
  if (!(dd1.result == dd2.start))
    throw Error("sequentially_independent: derivations are not chained");
  auto res1 = factor_through_mono(dd1.comatch, dd2.interior_to_start);
  if (!res1) return false;
  auto res2 = factor_through_mono(dd2.match, dd1.interior_to_result);
  return res2.has_value();
}

bool compositional_independence(const RuleComposite& comp) {
  auto res1 = factor_through_mono(comp.n1, comp.forward.interior_to_start);
  if (!res1) return false;
  auto res2 = factor_through_mono(comp.n2, comp.backward.interior_to_result);
  return res2.has_value();
}

std::optional<SwitchResult> switch_match(const Span& mu21, const RuleWithConditions& R2,
                                         const RuleWithConditions& R1, RewriteType t,
                                         const SizeBound& bound) {
  auto comp21 = try_compose_rules(R2, mu21, R1, t);
  if (!comp21 || !compositional_independence(*comp21)) return std::nullopt;

  auto a1 = factor_through_mono(mu21.right, R1.rule.to_output);  // M → K1
  auto a2 = factor_through_mono(mu21.left, R2.rule.to_input);    // M → K2
  if (!a1 || !a2)
    throw Error("switch_match: independent overlap does not restrict to the contexts");

  Span mu12 = make_span(compose(R1.rule.to_input, *a1), compose(R2.rule.to_output, *a2));

  auto comp12 = try_compose_rules(R1, mu12, R2, t);
  if (!comp12) throw Error("switch_match: switched overlap unexpectedly inadmissible");

  // All four composite variants must agree up to rule isomorphism.
  bool all_iso = true;
  std::vector<Rule> variants;
  for (RewriteType tt : {RewriteType::Dpo, RewriteType::Sqpo}) {
    auto c21 = try_compose_rules(R2, mu21, R1, tt);
    auto c12 = try_compose_rules(R1, mu12, R2, tt);
    if (!c21 || !c12) {
      all_iso = false;
      break;
    }
    variants.push_back(c21->composite);
    variants.push_back(c12->composite);
  }
  if (all_iso)
    for (std::size_t i = 1; i < variants.size(); ++i)
      if (!rule_isomorphic(variants[0], variants[i])) all_iso = false;

  // Amalgamated-rule shape: all three composite objects arise as pushouts
  // over the overlap.
  bool amalgamated = true;
  {
    PushoutResult po_o =
        pushout(make_span(compose(R2.rule.to_output, *a2), mu21.right));
    PushoutResult po_k = pushout(make_span(*a2, *a1));
    PushoutResult po_i =
        pushout(make_span(mu21.left, compose(R1.rule.to_input, *a1)));
    amalgamated = isomorphic(po_o.object, comp21->composite.output).has_value() &&
                  isomorphic(po_k.object, comp21->composite.context).has_value() &&
                  isomorphic(po_i.object, comp21->composite.input).has_value();
  }

  bool conds_equiv =
      rules_with_conditions_isomorphic(comp21->rule(), comp12->rule(), bound);

  return SwitchResult{mu12, std::move(*comp12), all_iso, amalgamated, conds_equiv};
}

}  // namespace gre
