#include "gre/feta.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gre/json_io.hpp"
#include "gre/match.hpp"
#include "gre/parallel.hpp"

namespace gre {

namespace {

bool rule_matches_event(const RuleWithConditions& candidate, const RuleWithConditions& event,
                        const EquivConfig& cfg) {
  if (cfg.check_conditions && (!candidate.cond.is_true() || !event.cond.is_true()))
    return rules_with_conditions_isomorphic(candidate, event, cfg.bound);
  return rule_isomorphic(candidate.rule, event.rule).has_value();
}

// Does T carry the event rule at any non-final column?
bool event_occurs_earlier(const RuleWithConditions& E, const Tracelet& T,
                          const EquivConfig& cfg) {
  for (std::size_t p = 0; p + 1 < T.columns.size(); ++p)
    if (rule_matches_event(T.columns[p].rule, E, cfg)) return true;
  return false;
}

std::vector<std::vector<int>> permutations_of(int count) {
  std::vector<int> base(count);
  for (int i = 0; i < count; ++i) base[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

std::vector<Tracelet> window_permutation_candidates(const Tracelet& T, int j, int k,
                                                    const std::vector<int>& order,
                                                    const EquivConfig& cfg,
                                                    PathwayDiagnostics* diag) {
  const int n = static_cast<int>(T.length());
  if (k < 1 || j - k < 1 || j > n) throw Error("window_permutation_candidates: bad window");
  if (static_cast<int>(order.size()) != k + 1)
    throw Error("window_permutation_candidates: order size mismatch");
  const int lo = j - k;

  SurgeryResult s = surgery(T, j, k);
  RuleWithConditions target_eval = evaluate(s.window.tracelet);
  const Graph& start_obj = T.column(lo).start;
  const Graph& top_obj = T.column(j).result;

  // Rules of the window in the requested new order.
  std::vector<RuleWithConditions> seq;
  for (int q = 0; q <= k; ++q) seq.push_back(T.column(lo + order[q]).rule);

  // All tracelets realizing that order.
  std::vector<Tracelet> partials{tracelet_of_rule(seq[0], T.type)};
  CondDiagnostics cdiag;
  for (int q = 1; q <= k; ++q) {
    Tracelet next_rule = tracelet_of_rule(seq[q], T.type);
    std::vector<Tracelet> grown;
    for (const Tracelet& p : partials)
      for (const Span& mu : enumerate_tracelet_matches(next_rule, p, cfg.bound, &cdiag))
        grown.push_back(compose_tracelets(next_rule, mu, p));
    partials = std::move(grown);
  }
  if (diag) diag->inconclusive_condition_checks += cdiag.inconclusive.load();

  std::vector<Tracelet> out;
  for (const Tracelet& tw : partials) {
    RuleWithConditions eval = evaluate(tw);
    // Every input-side iso gives a distinct gluing of the new window into the
    // prefix; automorphism twists can produce genuinely different tracelets.
    std::vector<Morphism> input_isos;
    for (const RuleIso& iso : rule_isomorphisms(eval.rule, target_eval.rule)) {
      bool fresh = true;
      for (const Morphism& known : input_isos)
        if (known == iso.on_input) fresh = false;
      if (fresh) input_isos.push_back(iso.on_input);
    }
    if (input_isos.empty()) continue;
    if (cfg.check_conditions && (!eval.cond.is_true() || !target_eval.cond.is_true())) {
      bool conds_ok = equivalent_bounded(shift(input_isos.front(), simplify(eval.cond)),
                                         simplify(target_eval.cond), cfg.bound);
      if (!conds_ok) {
        if (diag) diag->condition_verdict_splits += 1;
        continue;
      }
    }
    for (const Morphism& psi : input_isos) {
      Morphism translated = compose(s.window.match, psi);
      if (!is_admissible(eval, start_obj, translated, T.type)) continue;

      DerivationTrace window_trace = apply_tracelet(tw, start_obj, translated);

      // Relabel the final object back onto the host interface so the suffix
      // glues unchanged; every iso is a distinct gluing to the suffix.
      for (const Morphism& chi_candidate : enumerate_monos(window_trace.result(), top_obj)) {
        if (!chi_candidate.is_iso()) continue;
        DerivationTrace relabeled = window_trace;
        DirectDerivation& last = relabeled.steps.back();
        last.result = top_obj;
        last.comatch = compose(chi_candidate, last.comatch);
        last.interior_to_result = compose(chi_candidate, last.interior_to_result);

        DerivationTrace assembled{T.input(), {}};
        for (int p = 1; p < lo; ++p) assembled.steps.push_back(T.column(p));
        for (auto& step : relabeled.steps) assembled.steps.push_back(step);
        for (int p = j + 1; p <= n; ++p) assembled.steps.push_back(T.column(p));

        out.push_back(tracelet_from_trace(assembled).tracelet);
      }
    }
  }
  return out;
}

bool precedes(const RuleWithConditions& E, const Tracelet& T, const EquivConfig& cfg,
              PathwayDiagnostics* diag) {
  if (!rule_matches_event(T.columns.back().rule, E, cfg))
    throw Error("precedes: the final column does not carry the event rule");
  if (T.length() == 1) return true;
  if (event_occurs_earlier(E, T, cfg)) return false;

  const int n = static_cast<int>(T.length());
  std::vector<Tracelet> visited{T};
  std::vector<Tracelet> frontier{T};
  auto seen = [&](const Tracelet& cand) {
    for (const Tracelet& v : visited)
      if (abstraction_equivalent(v, cand, cfg)) return true;
    return false;
  };

  // Swap generation walks adjacent (size-2) windows only: wider windows make
  // the collapsed-diagram test degenerate to evaluation isomorphism, which
  // would detach the event from its causal past. The pairwise
  // shift_equivalent check retains the configured window cap.
  for (int depth = 0; depth < cfg.swap_depth && !frontier.empty(); ++depth) {
    std::vector<Tracelet> next;
    for (const Tracelet& cur : frontier) {
      for (int j = 2; j <= n; ++j) {
        for (const auto& order : permutations_of(2)) {
          for (Tracelet& cand : window_permutation_candidates(cur, j, 1, order, cfg, diag)) {
            if (seen(cand)) continue;
            if (event_occurs_earlier(E, cand, cfg)) return false;
            if (visited.size() >= cfg.swap_breadth) continue;
            visited.push_back(cand);
            next.push_back(std::move(cand));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return true;
}

std::vector<Tracelet> quotient(const std::vector<Tracelet>& ts, const EquivConfig& cfg,
                               PathwayDiagnostics* diag) {
  const std::size_t n = ts.size();
  if (n == 0) return {};
  for (const Tracelet& t : ts)
    if (t.length() != ts.front().length()) throw Error("quotient: mixed tracelet lengths");

  // Pairwise single-step equivalence, in parallel; the union-find closure
  // below yields the transitive hull within the set.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = i + 1; q < n; ++q) pairs.push_back({i, q});
  std::vector<char> related(pairs.size(), 0);
  std::vector<int> splits(pairs.size(), 0);
  par::parallel_for(pairs.size(), [&](std::size_t p) {
    const Tracelet& a = ts[pairs[p].first];
    const Tracelet& b = ts[pairs[p].second];
    if (abstraction_equivalent(a, b, cfg)) {
      related[p] = 1;
      return;
    }
    ShiftVerdict v = shift_equivalent_detail(a, b, cfg);
    bool verdict = cfg.check_conditions ? v.with_conditions : v.structural;
    related[p] = verdict ? 1 : 0;
    if (v.structural != v.with_conditions) splits[p] = 1;
  });

  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!related[p]) continue;
    std::size_t a = find(pairs[p].first), b = find(pairs[p].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  if (diag)
    for (int s : splits) diag->condition_verdict_splits += s;

  std::map<std::size_t, std::pair<std::string, std::size_t>> reps;  // root → (key, index)
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    std::string key = canonical_key(ts[i]);
    auto it = reps.find(root);
    if (it == reps.end() || key < it->second.first) reps[root] = {std::move(key), i};
  }
  std::vector<std::pair<std::string, std::size_t>> ordered;
  for (auto& [root, rep] : reps) ordered.push_back(rep);
  std::sort(ordered.begin(), ordered.end());
  std::vector<Tracelet> out;
  for (auto& [key, idx] : ordered) out.push_back(ts[idx]);
  return out;
}

PathwaySet feta(const PathwayQuery& q) {
  if (q.n_max < 2) throw Error("feta: n_max must be at least 2");
  if (q.type != RewriteType::Dpo && q.type != RewriteType::Sqpo)
    throw Error("feta: type must be dpo or sqpo");

  PathwaySet out;
  {
    std::ostringstream note;
    note << "precedes closure: chains of adjacent-window (size-2) shift steps, depth "
         << q.equiv.swap_depth << ", breadth " << q.equiv.swap_breadth
         << "; quotient window cap k<=" << q.equiv.window_cap << "; condition bound (v<="
         << q.equiv.bound.max_vertices << ", e<=" << q.equiv.bound.max_edges
         << ", par<=" << q.equiv.bound.max_parallel << ")";
    out.diagnostics.notes.push_back(note.str());
  }

  Tracelet t_event = tracelet_of_rule(q.target, q.type);
  std::vector<Tracelet> transitions;
  for (const RuleWithConditions& r : q.transitions)
    transitions.push_back(tracelet_of_rule(r, q.type));

  out.by_length[1] = {t_event};

  CondDiagnostics cdiag;
  for (int n = 2; n <= q.n_max; ++n) {
    const std::vector<Tracelet>& previous = out.by_length[n - 1];
    std::vector<Tracelet> pre;
    for (const Tracelet& p : previous)
      for (const Tracelet& t : transitions)
        for (const Span& mu : enumerate_tracelet_matches(p, t, q.equiv.bound, &cdiag))
          pre.push_back(compose_tracelets(p, mu, t));

    std::vector<char> keep(pre.size(), 0);
    std::vector<PathwayDiagnostics> local(pre.size());
    par::parallel_for(pre.size(), [&](std::size_t i) {
      keep[i] = precedes(q.target, pre[i], q.equiv, &local[i]) ? 1 : 0;
    });
    std::vector<Tracelet> kept;
    for (std::size_t i = 0; i < pre.size(); ++i) {
      out.diagnostics.inconclusive_condition_checks += local[i].inconclusive_condition_checks;
      out.diagnostics.condition_verdict_splits += local[i].condition_verdict_splits;
      if (keep[i]) kept.push_back(pre[i]);
    }
    out.by_length[n] = quotient(kept, q.equiv, &out.diagnostics);
  }
  out.diagnostics.inconclusive_condition_checks += cdiag.inconclusive.load();
  return out;
}

}  // namespace gre
