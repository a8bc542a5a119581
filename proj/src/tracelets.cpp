#include "gre/tracelets.hpp"

#include <algorithm>
#include <functional>

#include "gre/match.hpp"
#include "gre/parallel.hpp"

namespace gre {

void validate(const DerivationTrace& tr) {
  const Graph* cur = &tr.start;
  for (const DirectDerivation& dd : tr.steps) {
    if (!(dd.start == *cur)) throw Error("trace: steps are not chained on identical objects");
    cur = &dd.result;
  }
}

void validate(const Tracelet& t) {
  if (t.columns.empty()) throw Error("tracelet: length must be at least 1");
  validate(t.as_trace());
  for (const DirectDerivation& col : t.columns) {
    if (col.type != t.type) throw Error("tracelet: column type differs from tracelet type");
    validate(col);
  }
  if (!(t.cond.root() == t.input())) throw Error("tracelet: condition not rooted at the input");
}

Span interface_span(const DirectDerivation& column) {
  return make_span(column.interior_to_result, column.interior_to_start);
}

Tracelet tracelet_of_rule(const RuleWithConditions& R, RewriteType t) {
  if (t != RewriteType::Dpo && t != RewriteType::Sqpo)
    throw Error("tracelet_of_rule: type must be dpo or sqpo");
  const Rule& r = R.rule;
  DirectDerivation column{R,
                          t,
                          r.input,
                          r.context,
                          r.output,
                          Morphism::identity(r.input),
                          Morphism::identity(r.output),
                          Morphism::identity(r.context),
                          r.to_input,
                          r.to_output};
  return Tracelet{t, {std::move(column)}, R.cond};
}

namespace {

// The interface row folded to the composite span, top-down:
// (Y_{n+1,n} ⇐ Y_{n,n-1}) ∘ ... ∘ (Y_{2,1} ⇐ Y_{1,0}).
Span fold_interface(const std::vector<DirectDerivation>& columns, std::size_t lo,
                    std::size_t hi) {
  Span s = interface_span(columns[hi]);
  for (std::size_t idx = hi; idx-- > lo;) s = compose_spans(s, interface_span(columns[idx]));
  return s;
}

Rule span_as_rule(const Span& s) {
  return Rule{s.left.cod(), s.apex(), s.right.cod(), s.left, s.right};
}

// The bottom span of a column read as a linear rule (Y_out ⇐ Y_in).
Rule column_bottom_rule(const DirectDerivation& col) {
  return Rule{col.result, col.interior, col.start, col.interior_to_result,
              col.interior_to_start};
}

DirectDerivation paste_column(const DirectDerivation& col, const DirectDerivation& below) {
  return DirectDerivation{col.rule,
                          col.type,
                          below.start,
                          below.interior,
                          below.result,
                          compose(below.match, col.match),
                          compose(below.comatch, col.comatch),
                          compose(below.to_interior, col.to_interior),
                          below.interior_to_start,
                          below.interior_to_result};
}

}  // namespace

RuleWithConditions evaluate(const Tracelet& T) {
  Span s = fold_interface(T.columns, 0, T.columns.size() - 1);
  return RuleWithConditions(span_as_rule(s), T.cond);
}

std::optional<TraceletComposeResult> try_compose_tracelets(const Tracelet& T2, const Span& mu,
                                                           const Tracelet& T1) {
  if (T2.type != T1.type) throw Error("compose_tracelets: type tags differ");
  const RewriteType t = T1.type;
  if (!(mu.left.cod() == T2.input()))
    throw Error("compose_tracelets: overlap left foot must land in the second input");
  if (!(mu.right.cod() == T1.output()))
    throw Error("compose_tracelets: overlap right foot must land in the first output");
  if (!mu.left.is_mono() || !mu.right.is_mono())
    throw Error("compose_tracelets: overlap legs must be mono");

  const std::size_t n = T1.length();
  const std::size_t m = T2.length();

  PushoutResult po = pushout(mu);
  Morphism n2 = po.left;
  Morphism n1 = po.right;

  // Downward DPO†-chain through T1's columns.
  std::vector<DirectDerivation> first_cols;
  first_cols.reserve(n);
  std::vector<Morphism> first_row(n + 1);
  std::vector<Morphism> first_interiors(n);
  first_row[n] = n1;
  Morphism cur = n1;
  for (std::size_t j = n; j-- > 0;) {
    const DirectDerivation& col = T1.columns[j];
    RuleWithConditions bottom{column_bottom_rule(col)};
    auto dd = apply_dagger(bottom, cur.cod(), cur);
    if (!dd) return std::nullopt;
    first_interiors[j] = dd->to_interior;
    first_cols.push_back(paste_column(col, *dd));
    cur = dd->match;  // Y_{j,j-1} → Z_{j,j-1}
    first_row[j] = cur;
  }
  std::reverse(first_cols.begin(), first_cols.end());

  // Upward t-type chain through T2's columns.
  std::vector<DirectDerivation> second_cols;
  std::vector<Morphism> second_row;
  std::vector<Morphism> second_interiors;
  second_row.push_back(n2);
  Morphism cur2 = n2;
  for (std::size_t i = 0; i < m; ++i) {
    const DirectDerivation& col = T2.columns[i];
    RuleWithConditions bottom{column_bottom_rule(col)};
    if (t == RewriteType::Dpo && !pushout_complement(bottom.rule.to_input, cur2))
      return std::nullopt;
    DirectDerivation dd = apply(bottom, cur2.cod(), cur2, t);
    second_interiors.push_back(dd.to_interior);
    second_cols.push_back(paste_column(col, dd));
    cur2 = dd.comatch;
    second_row.push_back(cur2);
  }

  std::vector<DirectDerivation> columns = first_cols;
  columns.insert(columns.end(), second_cols.begin(), second_cols.end());

  const Graph& new_input = columns.front().start;
  Condition cond = Condition::truth(new_input);
  if (!T1.cond.is_true() || !T2.cond.is_true()) {
    Span lower = fold_interface(columns, 0, n - 1);  // N ⇐ Z_{1,0}
    cond = simplify(Condition::conjunction(
        new_input,
        {shift(first_row[0], T1.cond), trans(span_as_rule(lower), shift(n2, T2.cond))}));
  }

  Tracelet composed{t, std::move(columns), std::move(cond)};
  return TraceletComposeResult{std::move(composed), po.object,       std::move(n2),
                               std::move(n1),       std::move(first_row),
                               std::move(second_row), std::move(first_interiors),
                               std::move(second_interiors)};
}

Tracelet compose_tracelets(const Tracelet& T2, const Span& mu, const Tracelet& T1) {
  auto res = try_compose_tracelets(T2, mu, T1);
  if (!res)
    throw NotAdmissible("tracelet composition: required pushout complement does not exist");
  return std::move(res->tracelet);
}

std::vector<Span> enumerate_tracelet_matches(const Tracelet& T2, const Tracelet& T1,
                                             const SizeBound& bound, CondDiagnostics* diag) {
  std::vector<Span> candidates;
  for (const Graph& m : enumerate_subgraphs(T2.input())) {
    Morphism into_input = inclusion(m, T2.input());
    for (const Morphism& g : enumerate_monos(m, T1.output()))
      candidates.push_back(make_span(into_input, g));
  }

  std::vector<Span> tracelet_level = par::parallel_filter(candidates, [&](const Span& mu) {
    auto comp = try_compose_tracelets(T2, mu, T1);
    if (!comp) return false;
    if (comp->tracelet.cond.is_true()) return true;
    BoundedVerdict verdict = not_false_bounded(comp->tracelet.cond, bound);
    if (!verdict.conclusive && diag) diag->inconclusive.fetch_add(1, std::memory_order_relaxed);
    return verdict.value;
  });

  // Theorem-level cross-check: the match set must coincide with the rule
  // match set of the evaluations.
  std::vector<Span> rule_level =
      enumerate_rule_matches(evaluate(T2), evaluate(T1), T1.type, bound, nullptr);
  if (tracelet_level.size() != rule_level.size() ||
      !std::equal(tracelet_level.begin(), tracelet_level.end(), rule_level.begin()))
    throw Error("enumerate_tracelet_matches: tracelet- and rule-level match sets disagree");

  return tracelet_level;
}

DerivationTrace apply_tracelet(const Tracelet& T, const Graph& X0, const Morphism& m) {
  RuleWithConditions composite = evaluate(T);
  if (!(m.dom() == T.input()) || !(m.cod() == X0))
    throw NotAdmissible("apply_tracelet: match endpoints do not fit");
  if (!is_admissible(composite, X0, m, T.type))
    throw NotAdmissible("apply_tracelet: match is not admissible for the composite rule");

  DerivationTrace trace{X0, {}};
  Morphism cur = m;
  for (const DirectDerivation& col : T.columns) {
    RuleWithConditions bottom{column_bottom_rule(col)};
    DirectDerivation dd = apply(bottom, cur.cod(), cur, T.type);
    DirectDerivation step = paste_column(col, dd);
    if (!satisfies(step.match, col.rule.cond))
      throw Error("apply_tracelet: step match violates the rule condition");
    trace.steps.push_back(step);
    cur = dd.comatch;
  }
  return trace;
}

TraceletWithMatch tracelet_from_trace(const DerivationTrace& tr) {
  validate(tr);
  if (tr.steps.empty()) throw Error("tracelet_from_trace: trace must have at least one step");
  const RewriteType t = tr.steps.front().type;
  if (t != RewriteType::Dpo && t != RewriteType::Sqpo)
    throw Error("tracelet_from_trace: steps must be dpo or sqpo derivations");
  for (const DirectDerivation& dd : tr.steps)
    if (dd.type != t) throw Error("tracelet_from_trace: mixed derivation types");

  Tracelet T = tracelet_of_rule(tr.steps.front().rule, t);
  std::vector<Morphism> embs{tr.steps.front().match, tr.steps.front().comatch};

  for (std::size_t j = 1; j < tr.steps.size(); ++j) {
    const DirectDerivation& dd = tr.steps[j];
    const std::size_t n = T.length();

    PullbackResult pb = pullback(make_cospan(dd.match, embs[n]));
    Span mu = make_span(pb.left, pb.right);
    Tracelet single = tracelet_of_rule(dd.rule, t);
    auto comp = try_compose_tracelets(single, mu, T);
    if (!comp) throw Error("tracelet_from_trace: synthesized overlap is inadmissible");

    auto u_n = pushout_mediate(mu, PushoutResult{comp->glued, comp->n2, comp->n1}, dd.match,
                               embs[n]);
    if (!u_n || !u_n->is_mono())
      throw Error("tracelet_from_trace: glued object does not embed into the trace");

    const auto& cols = comp->tracelet.columns;
    std::vector<Morphism> new_embs(n + 2);
    new_embs[n] = *u_n;

    // Walk the DPO†-extended part downward, transporting the embedding.
    for (std::size_t jj = n; jj-- > 0;) {
      const DirectDerivation& amb = tr.steps[jj];
      const DirectDerivation& nc = cols[jj];
      auto u = factor_through_mono(compose(new_embs[jj + 1], nc.interior_to_result),
                                   amb.interior_to_result);
      if (!u) throw Error("tracelet_from_trace: interior does not restrict to the trace");
      Span po_span = make_span(T.columns[jj].interior_to_start, comp->first_interiors[jj]);
      PushoutResult po_legs{nc.start, comp->first_row[jj], nc.interior_to_start};
      auto zeta = pushout_mediate(po_span, po_legs, embs[jj],
                                  compose(amb.interior_to_start, *u));
      if (!zeta || !zeta->is_mono())
        throw Error("tracelet_from_trace: row embedding construction failed");
      new_embs[jj] = *zeta;
    }

    // Transport the top embedding through the freshly applied column.
    {
      const DirectDerivation& amb = dd;
      const DirectDerivation& nc = cols[n];
      auto u = factor_through_mono(compose(*u_n, nc.interior_to_start), amb.interior_to_start);
      if (!u) throw Error("tracelet_from_trace: top interior does not restrict");
      Span po_span = make_span(dd.rule.rule.to_output, comp->second_interiors[0]);
      PushoutResult po_legs{nc.result, comp->second_row[1], nc.interior_to_result};
      auto zeta = pushout_mediate(po_span, po_legs, amb.comatch,
                                  compose(amb.interior_to_result, *u));
      if (!zeta || !zeta->is_mono())
        throw Error("tracelet_from_trace: top row embedding construction failed");
      new_embs[n + 1] = *zeta;
    }

    T = comp->tracelet;
    embs = std::move(new_embs);
  }

  return TraceletWithMatch{std::move(T), embs.front(), std::move(embs)};
}

namespace {

// Interior embedding of a minimal column into an ambient column sharing row
// embeddings above and below.
Morphism column_interior_embedding(const DirectDerivation& minimal,
                                   const DirectDerivation& ambient, const Morphism& emb_out,
                                   const Morphism& emb_in) {
  auto u = factor_through_mono(compose(emb_out, minimal.interior_to_result),
                               ambient.interior_to_result);
  if (!u) throw Error("surgery: interior does not restrict into the host column");
  if (!(compose(ambient.interior_to_start, *u) ==
        compose(emb_in, minimal.interior_to_start)))
    throw Error("surgery: interior embedding does not commute below");
  return *u;
}

}  // namespace

SurgeryResult surgery(const Tracelet& T, int j, int k) {
  const int n = static_cast<int>(T.length());
  if (k < 0 || j < 1 || j > n || j - k < 1) throw Error("surgery: window out of range");
  const int lo = j - k;  // 1-based first column of the window

  DerivationTrace window_trace{T.column(lo).start, {}};
  for (int p = lo; p <= j; ++p) window_trace.steps.push_back(T.column(p));

  TraceletWithMatch window = tracelet_from_trace(window_trace);
  const Tracelet& tw = window.tracelet;

  // Aligned fold: compose the minimal and ambient interface rows in lock
  // step, carrying the mediator between the fold apexes.
  const auto& mcols = tw.columns;
  std::vector<Morphism> interior_embs(mcols.size());
  for (std::size_t i = 0; i < mcols.size(); ++i)
    interior_embs[i] = column_interior_embedding(mcols[i], T.column(lo + static_cast<int>(i)),
                                                 window.row_embeddings[i + 1],
                                                 window.row_embeddings[i]);

  Span sm = interface_span(mcols.back());
  Span sa = interface_span(T.column(j));
  Morphism med = interior_embs.back();
  for (std::size_t i = mcols.size() - 1; i-- > 0;) {
    Span sm_i = interface_span(mcols[i]);
    Span sa_i = interface_span(T.column(lo + static_cast<int>(i)));
    PullbackResult pbm = pullback(make_cospan(sm.right, sm_i.left));
    PullbackResult pba = pullback(make_cospan(sa.right, sa_i.left));
    auto med_next = pullback_mediate(make_cospan(sa.right, sa_i.left), pba,
                                     compose(med, pbm.left),
                                     compose(interior_embs[i], pbm.right));
    if (!med_next) throw Error("surgery: aligned fold lost the apex mediator");
    sm = make_span(compose(sm.left, pbm.left), compose(sm_i.right, pbm.right));
    sa = make_span(compose(sa.left, pba.left), compose(sa_i.right, pba.right));
    med = *med_next;
  }

  RuleWithConditions window_rule(span_as_rule(sm), tw.cond);
  DirectDerivation collapsed{window_rule,
                             T.type,
                             sa.right.cod(),
                             sa.apex(),
                             sa.left.cod(),
                             window.match,
                             window.row_embeddings.back(),
                             med,
                             sa.right,
                             sa.left};
  return SurgeryResult{std::move(collapsed), std::move(window)};
}

DerivationTrace collapse_window(const Tracelet& T, int j, int k) {
  SurgeryResult s = surgery(T, j, k);
  DerivationTrace out{T.input(), {}};
  for (int p = 1; p < j - k; ++p) out.steps.push_back(T.column(p));
  out.steps.push_back(s.collapsed);
  for (int p = j + 1; p <= static_cast<int>(T.length()); ++p) out.steps.push_back(T.column(p));
  return out;
}

namespace {

std::vector<Morphism> isos_between(const Graph& a, const Graph& b) {
  std::vector<Morphism> out;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return out;
  for (const Morphism& m : enumerate_monos(a, b))
    if (m.is_iso()) out.push_back(m);
  return out;
}

std::vector<Morphism> isos_between_pinned(const Graph& a, const Graph& b, const Morphism& via,
                                          const Morphism& target) {
  std::vector<Morphism> out;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return out;
  for (const Morphism& m : enumerate_monos_factoring(a, b, via, target))
    if (m.is_iso()) out.push_back(m);
  return out;
}

bool conditions_match(const Condition& ca, const Condition& cb, const Morphism& iota,
                      const EquivConfig& cfg) {
  if (ca.is_true() && cb.is_true()) return true;
  if (condition_isomorphic(ca, cb, iota)) return true;
  return equivalent_bounded(shift(iota, ca), cb, cfg.bound);
}

// Collects the start-object isos extending to full diagram-iso families.
// With stop_at_first, returns as soon as one witness is found.
std::vector<Morphism> diagram_iso_witnesses(const DerivationTrace& a, const DerivationTrace& b,
                                            const EquivConfig& cfg, const Condition* root_a,
                                            const Condition* root_b, bool stop_at_first) {
  std::vector<Morphism> witnesses;
  if (a.steps.size() != b.steps.size()) return witnesses;
  for (std::size_t i = 0; i < a.steps.size(); ++i)
    if (a.steps[i].type != b.steps[i].type) return witnesses;

  std::function<bool(std::size_t, const Morphism&)> step = [&](std::size_t idx,
                                                               const Morphism& g) -> bool {
    if (idx == a.steps.size()) return true;
    const DirectDerivation& da = a.steps[idx];
    const DirectDerivation& db = b.steps[idx];

    auto iota = factor_through_mono(compose(g, da.match), db.match);
    if (!iota || !iota->is_iso()) return false;
    auto delta = factor_through_mono(compose(g, da.interior_to_start), db.interior_to_start);
    if (!delta || !delta->is_iso()) return false;
    auto kappa = factor_through_mono(compose(*delta, da.to_interior), db.to_interior);
    if (!kappa || !kappa->is_iso()) return false;
    if (!(compose(db.rule.rule.to_input, *kappa) == compose(*iota, da.rule.rule.to_input)))
      return false;
    if (cfg.check_conditions && !conditions_match(da.rule.cond, db.rule.cond, *iota, cfg))
      return false;

    for (const Morphism& g_next :
         isos_between_pinned(da.result, db.result, da.interior_to_result,
                             compose(db.interior_to_result, *delta))) {
      auto omega = factor_through_mono(compose(g_next, da.comatch), db.comatch);
      if (!omega || !omega->is_iso()) continue;
      if (!(compose(db.rule.rule.to_output, *kappa) == compose(*omega, da.rule.rule.to_output)))
        continue;
      if (step(idx + 1, g_next)) return true;
    }
    return false;
  };

  for (const Morphism& g0 : isos_between(a.start, b.start)) {
    if (root_a && root_b && cfg.check_conditions && !conditions_match(*root_a, *root_b, g0, cfg))
      continue;
    if (step(0, g0)) {
      witnesses.push_back(g0);
      if (stop_at_first) return witnesses;
    }
  }
  return witnesses;
}

bool diagram_isomorphic_impl(const DerivationTrace& a, const DerivationTrace& b,
                             const EquivConfig& cfg, const Condition* root_a,
                             const Condition* root_b) {
  return !diagram_iso_witnesses(a, b, cfg, root_a, root_b, true).empty();
}

bool window_rules_match(const Tracelet& a, const Tracelet& b, int j, int k, bool use_conditions,
                        const EquivConfig& cfg) {
  const int lo = j - k;
  std::vector<const RuleWithConditions*> xs, ys;
  for (int p = lo; p <= j; ++p) {
    xs.push_back(&a.column(p).rule);
    ys.push_back(&b.column(p).rule);
  }
  std::vector<bool> used(ys.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == xs.size()) return true;
    for (std::size_t q = 0; q < ys.size(); ++q) {
      if (used[q]) continue;
      bool ok = use_conditions
                    ? rules_with_conditions_isomorphic(*xs[i], *ys[q], cfg.bound)
                    : rule_isomorphic(xs[i]->rule, ys[q]->rule).has_value();
      if (!ok) continue;
      used[q] = true;
      if (rec(i + 1)) return true;
      used[q] = false;
    }
    return false;
  };
  return rec(0);
}

bool shift_equivalent_impl(const Tracelet& a, const Tracelet& b, const EquivConfig& cfg) {
  if (a.length() != b.length() || a.type != b.type) return false;
  EquivConfig local = cfg;
  if (diagram_isomorphic_impl(a.as_trace(), b.as_trace(), local,
                              cfg.check_conditions ? &a.cond : nullptr,
                              cfg.check_conditions ? &b.cond : nullptr))
    return true;
  const int n = static_cast<int>(a.length());
  for (int k = 1; k <= std::min(cfg.window_cap, n - 1); ++k) {
    for (int j = k + 1; j <= n; ++j) {
      if (!window_rules_match(a, b, j, k, cfg.check_conditions, cfg)) continue;
      DerivationTrace ca = collapse_window(a, j, k);
      DerivationTrace cb = collapse_window(b, j, k);
      if (diagram_isomorphic_impl(ca, cb, local, nullptr, nullptr)) return true;
    }
  }
  return false;
}

}  // namespace

bool diagram_isomorphic(const DerivationTrace& a, const DerivationTrace& b,
                        const EquivConfig& cfg) {
  return diagram_isomorphic_impl(a, b, cfg, nullptr, nullptr);
}

bool abstraction_equivalent(const Tracelet& a, const Tracelet& b, const EquivConfig& cfg) {
  if (a.length() != b.length() || a.type != b.type) return false;
  return diagram_isomorphic_impl(a.as_trace(), b.as_trace(), cfg,
                                 cfg.check_conditions ? &a.cond : nullptr,
                                 cfg.check_conditions ? &b.cond : nullptr);
}

std::vector<Morphism> abstraction_witnesses(const Tracelet& a, const Tracelet& b,
                                            const EquivConfig& cfg) {
  if (a.length() != b.length() || a.type != b.type) return {};
  return diagram_iso_witnesses(a.as_trace(), b.as_trace(), cfg,
                               cfg.check_conditions ? &a.cond : nullptr,
                               cfg.check_conditions ? &b.cond : nullptr, false);
}

ShiftVerdict shift_equivalent_detail(const Tracelet& a, const Tracelet& b,
                                     const EquivConfig& cfg) {
  EquivConfig structural = cfg;
  structural.check_conditions = false;
  ShiftVerdict verdict;
  verdict.structural = shift_equivalent_impl(a, b, structural);
  bool all_true = a.cond.is_true() && b.cond.is_true();
  if (all_true)
    for (const auto& col : a.columns) all_true = all_true && col.rule.cond.is_true();
  if (all_true)
    for (const auto& col : b.columns) all_true = all_true && col.rule.cond.is_true();
  if (all_true) {
    verdict.with_conditions = verdict.structural;
  } else {
    EquivConfig with = cfg;
    with.check_conditions = true;
    verdict.with_conditions = shift_equivalent_impl(a, b, with);
  }
  return verdict;
}

bool shift_equivalent(const Tracelet& a, const Tracelet& b, const EquivConfig& cfg) {
  ShiftVerdict v = shift_equivalent_detail(a, b, cfg);
  return cfg.check_conditions ? v.with_conditions : v.structural;
}

}  // namespace gre
