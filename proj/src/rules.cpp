#include "gre/rules.hpp"

#include "gre/match.hpp"
#include "gre/parallel.hpp"

namespace gre {

const char* to_string(RewriteType t) {
  switch (t) {
    case RewriteType::Dpo:
      return "dpo";
    case RewriteType::Sqpo:
      return "sqpo";
    case RewriteType::DpoDagger:
      return "dpo-dagger";
  }
  return "?";
}

Rule Rule::from_span(const Span& s) {
  Rule r{s.left.cod(), s.apex(), s.right.cod(), s.left, s.right};
  validate(r);
  return r;
}

Rule Rule::identity_rule(const Graph& g) {
  Morphism id = Morphism::identity(g);
  return Rule{g, g, g, id, id};
}

Rule Rule::reversed() const { return Rule{input, context, output, to_input, to_output}; }

void validate(const Rule& r) {
  if (!(r.to_output.dom() == r.context) || !(r.to_output.cod() == r.output))
    throw Error("rule: output leg endpoints wrong");
  if (!(r.to_input.dom() == r.context) || !(r.to_input.cod() == r.input))
    throw Error("rule: input leg endpoints wrong");
  if (!r.to_output.is_mono() || !r.to_input.is_mono())
    throw Error("rule: legs must be monomorphisms");
}

std::vector<RuleIso> rule_isomorphisms(const Rule& a, const Rule& b) {
  std::vector<RuleIso> out;
  if (a.context.vertex_count() != b.context.vertex_count() ||
      a.context.edge_count() != b.context.edge_count())
    return out;
  for (const Morphism& kappa : enumerate_monos(a.context, b.context)) {
    if (!kappa.is_iso()) continue;
    for (const Morphism& omega : enumerate_monos_factoring(
             a.output, b.output, a.to_output, compose(b.to_output, kappa))) {
      if (!omega.is_iso()) continue;
      for (const Morphism& iota : enumerate_monos_factoring(
               a.input, b.input, a.to_input, compose(b.to_input, kappa))) {
        if (!iota.is_iso()) continue;
        out.push_back(RuleIso{omega, kappa, iota});
      }
    }
  }
  return out;
}

std::optional<RuleIso> rule_isomorphic(const Rule& a, const Rule& b) {
  if (a.context.vertex_count() != b.context.vertex_count() ||
      a.context.edge_count() != b.context.edge_count())
    return std::nullopt;
  for (const Morphism& kappa : enumerate_monos(a.context, b.context)) {
    if (!kappa.is_iso()) continue;
    for (const Morphism& omega : enumerate_monos_factoring(
             a.output, b.output, a.to_output, compose(b.to_output, kappa))) {
      if (!omega.is_iso()) continue;
      for (const Morphism& iota : enumerate_monos_factoring(
               a.input, b.input, a.to_input, compose(b.to_input, kappa))) {
        if (!iota.is_iso()) continue;
        return RuleIso{omega, kappa, iota};
      }
    }
  }
  return std::nullopt;
}

RuleWithConditions::RuleWithConditions(Rule r, Condition c) : rule(std::move(r)), cond(std::move(c)) {
  validate(rule);
  if (!(cond.root() == rule.input)) throw Error("rule condition must be rooted at the input");
}

RuleWithConditions::RuleWithConditions(Rule r)
    : rule(std::move(r)), cond(Condition::truth(rule.input)) {
  validate(rule);
}

bool rules_with_conditions_isomorphic(const RuleWithConditions& a, const RuleWithConditions& b,
                                      const SizeBound& bound) {
  auto iso = rule_isomorphic(a.rule, b.rule);
  if (!iso) return false;
  Condition a_cond = simplify(a.cond);
  Condition b_cond = simplify(b.cond);
  if (a_cond.is_true() && b_cond.is_true()) return true;
  // Transport a's condition along the input iso, then compare semantically.
  Condition transported = shift(iso->on_input, a_cond);
  return equivalent_bounded(transported, b_cond, bound);
}

void validate(const DirectDerivation& dd) {
  validate(dd.rule.rule);
  const Rule& r = dd.rule.rule;
  if (!(dd.match.dom() == r.input) || !(dd.match.cod() == dd.start))
    throw Error("derivation: match endpoints wrong");
  if (!(dd.comatch.dom() == r.output) || !(dd.comatch.cod() == dd.result))
    throw Error("derivation: comatch endpoints wrong");
  if (!(dd.to_interior.dom() == r.context) || !(dd.to_interior.cod() == dd.interior))
    throw Error("derivation: interior map endpoints wrong");
  if (!dd.match.is_mono() || !dd.comatch.is_mono() || !dd.to_interior.is_mono() ||
      !dd.interior_to_start.is_mono() || !dd.interior_to_result.is_mono())
    throw Error("derivation: all vertical and horizontal legs must be mono");
  if (!(compose(dd.match, r.to_input) == compose(dd.interior_to_start, dd.to_interior)))
    throw Error("derivation: input square does not commute");
  if (!(compose(dd.comatch, r.to_output) == compose(dd.interior_to_result, dd.to_interior)))
    throw Error("derivation: output square does not commute");

  const bool output_pushout =
      is_pushout_square(make_span(r.to_output, dd.to_interior), dd.comatch, dd.interior_to_result);
  const bool input_pushout =
      is_pushout_square(make_span(r.to_input, dd.to_interior), dd.match, dd.interior_to_start);
  switch (dd.type) {
    case RewriteType::Dpo:
    case RewriteType::DpoDagger:
      if (!output_pushout || !input_pushout)
        throw Error("derivation: DPO squares must both be pushouts");
      break;
    case RewriteType::Sqpo:
      if (!output_pushout) throw Error("derivation: SqPO output square must be a pushout");
      if (!is_fpc_square(r.to_input, dd.match, dd.to_interior, dd.interior_to_start))
        throw Error("derivation: SqPO input square must be a final pullback complement");
      break;
  }
}

namespace {

std::optional<ComplementResult> input_complement(const Rule& r, const Morphism& m, RewriteType t) {
  switch (t) {
    case RewriteType::Dpo:
      return pushout_complement(r.to_input, m);
    case RewriteType::Sqpo:
      return final_pullback_complement(r.to_input, m);
    default:
      throw Error("input_complement: type must be dpo or sqpo");
  }
}

}  // namespace

bool is_admissible(const RuleWithConditions& R, const Graph& X, const Morphism& m, RewriteType t) {
  if (!(m.dom() == R.rule.input) || !(m.cod() == X) || !m.is_mono()) return false;
  if (t == RewriteType::Dpo && !pushout_complement(R.rule.to_input, m)) return false;
  if (t != RewriteType::Dpo && t != RewriteType::Sqpo)
    throw Error("is_admissible: type must be dpo or sqpo");
  return satisfies(m, R.cond);
}

std::vector<Morphism> find_matches(const RuleWithConditions& R, const Graph& X, RewriteType t) {
  std::vector<Morphism> candidates = enumerate_monos(R.rule.input, X);
  return par::parallel_filter(candidates,
                              [&](const Morphism& m) { return is_admissible(R, X, m, t); });
}

DirectDerivation apply(const RuleWithConditions& R, const Graph& X, const Morphism& m,
                       RewriteType t) {
  if (!(m.dom() == R.rule.input) || !(m.cod() == X))
    throw NotAdmissible("match endpoints do not fit rule and host graph");
  if (!m.is_mono()) throw NotAdmissible("match is not mono");
  if (t == RewriteType::Dpo && !pushout_complement(R.rule.to_input, m))
    throw NotAdmissible("pushout-complement does not exist (dangling condition)");
  if (!satisfies(m, R.cond)) throw NotAdmissible("application condition violated");

  // The interior is the left pushout foot so surviving host ids persist in
  // the result; created elements get fresh ids.
  auto comp = input_complement(R.rule, m, t);
  PushoutResult po = pushout(make_span(comp->embed, R.rule.to_output));
  return DirectDerivation{R,         t,
                          X,         comp->context,
                          po.object, m,
                          po.right,  comp->embed,
                          comp->include, po.left};
}

std::optional<DirectDerivation> apply_dagger(const RuleWithConditions& R, const Graph& Y,
                                             const Morphism& comatch) {
  if (!(comatch.dom() == R.rule.output) || !(comatch.cod() == Y))
    throw Error("apply_dagger: comatch endpoints do not fit");
  if (!comatch.is_mono()) throw Error("apply_dagger: comatch must be mono");
  auto comp = pushout_complement(R.rule.to_output, comatch);
  if (!comp) return std::nullopt;
  PushoutResult po = pushout(make_span(comp->embed, R.rule.to_input));
  return DirectDerivation{R,
                          RewriteType::DpoDagger,
                          po.object,
                          comp->context,
                          Y,
                          po.right,
                          comatch,
                          comp->embed,
                          po.left,
                          comp->include};
}

}  // namespace gre
