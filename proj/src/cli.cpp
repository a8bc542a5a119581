#include "gre/cli.hpp"

#include <fstream>
#include <ostream>

#include "gre/dot.hpp"
#include "gre/match.hpp"

namespace gre {

namespace {

std::optional<json> load_json(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open '" << path << "'\n";
    return std::nullopt;
  }
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    err << "'" << path << "' is not valid JSON\n";
    return std::nullopt;
  }
  return j;
}

std::optional<GrammarFile> load_grammar(const std::string& path, std::ostream& err) {
  auto j = load_json(path, err);
  if (!j) return std::nullopt;
  try {
    return grammar_from_json(*j);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return std::nullopt;
  }
}

SizeBound bound_from_flag(int n) {
  return SizeBound{n, n, 2};
}

json bound_to_json(const SizeBound& b) {
  return json{{"max_vertices", b.max_vertices},
              {"max_edges", b.max_edges},
              {"max_parallel", b.max_parallel}};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph empty = initial_object();
  PushoutResult po = pushout(make_span(Morphism(empty, a, {}, {}), Morphism(empty, b, {}, {})));
  return po.object;
}

}  // namespace

int cmd_check(const std::string& grammar_path, std::ostream& out, std::ostream& err) {
  auto j = load_json(grammar_path, err);
  if (!j) return kExitUnresolved;
  std::vector<std::string> problems = validate_grammar(*j);
  if (problems.empty()) {
    out << "ok\n";
    return kExitOk;
  }
  for (const std::string& p : problems) out << p << "\n";
  return kExitInvalid;
}

int cmd_apply(const std::string& grammar_path, const std::string& rule_name,
              const std::string& graph_name, int match_index, const CliOptions& opts,
              std::ostream& out, std::ostream& err) {
  auto grammar = load_grammar(grammar_path, err);
  if (!grammar) return kExitUnresolved;
  auto rule_it = grammar->rules.find(rule_name);
  if (rule_it == grammar->rules.end()) {
    err << "unresolved rule '" << rule_name << "'\n";
    return kExitUnresolved;
  }
  auto graph_it = grammar->graphs.find(graph_name);
  if (graph_it == grammar->graphs.end()) {
    err << "unresolved graph '" << graph_name << "'\n";
    return kExitUnresolved;
  }
  const RuleWithConditions& rule = rule_it->second;
  const Graph& host = graph_it->second;

  std::vector<Morphism> monos = enumerate_monos(rule.rule.input, host);
  if (match_index < 0 || static_cast<std::size_t>(match_index) >= monos.size()) {
    err << "match index " << match_index << " out of range (" << monos.size()
        << " monomorphisms)\n";
    return kExitUnresolved;
  }
  const Morphism& m = monos[match_index];
  if (opts.type == RewriteType::Dpo && !pushout_complement(rule.rule.to_input, m)) {
    err << "inadmissible match: pushout-complement does not exist\n";
    return kExitInadmissible;
  }
  if (!satisfies(m, rule.cond)) {
    err << "inadmissible match: condition violated\n";
    return kExitInadmissible;
  }

  DirectDerivation dd = apply(rule, host, m, opts.type);
  if (opts.format == "dot") {
    out << to_dot(dd, "derivation");
  } else {
    json report{{"rule", rule_name},
                {"graph", graph_name},
                {"match_index", match_index},
                {"type", to_string(opts.type)},
                {"matches_total", monos.size()},
                {"derivation", to_json(dd)}};
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_compose(const std::string& grammar_path, const std::string& rule2_name,
                const std::string& rule1_name, const CliOptions& opts, std::ostream& out,
                std::ostream& err) {
  auto grammar = load_grammar(grammar_path, err);
  if (!grammar) return kExitUnresolved;
  auto r2 = grammar->rules.find(rule2_name);
  auto r1 = grammar->rules.find(rule1_name);
  if (r2 == grammar->rules.end() || r1 == grammar->rules.end()) {
    err << "unresolved rule '" << (r2 == grammar->rules.end() ? rule2_name : rule1_name)
        << "'\n";
    return kExitUnresolved;
  }

  SizeBound bound = opts.bound
                        ? bound_from_flag(*opts.bound)
                        : SizeBound::for_root(
                              disjoint_union(r2->second.rule.input, r1->second.rule.output));
  CondDiagnostics diag;
  std::vector<Span> overlaps =
      enumerate_rule_matches(r2->second, r1->second, opts.type, bound, &diag);

  json composites = json::array();
  for (const Span& mu : overlaps) {
    RuleComposite comp = compose_rules(r2->second, mu, r1->second, opts.type);
    json entry{{"overlap",
                json{{"graph", to_json(mu.apex())},
                     {"into_input", to_json(mu.left)},
                     {"into_output", to_json(mu.right)}}},
               {"rule", to_json(comp.rule())}};
    composites.push_back(entry);
  }
  json report{{"rule2", rule2_name},
              {"rule1", rule1_name},
              {"type", to_string(opts.type)},
              {"bound", bound_to_json(bound)},
              {"inconclusive_condition_checks", diag.inconclusive.load()},
              {"composites", composites}};
  out << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_feta(const std::string& grammar_path, const std::string& query_name,
             const CliOptions& opts, std::ostream& out, std::ostream& err) {
  auto grammar = load_grammar(grammar_path, err);
  if (!grammar) return kExitUnresolved;

  std::optional<PathwayQuery> query;
  try {
    std::optional<SizeBound> bound;
    if (opts.bound) bound = bound_from_flag(*opts.bound);
    query = build_query(*grammar, query_name, bound, opts.nmax);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUnresolved;
  }

  PathwaySet ps = feta(*query);

  if (opts.format == "dot") {
    for (const auto& [n, pathways] : ps.by_length)
      for (std::size_t i = 0; i < pathways.size(); ++i)
        out << to_dot(pathways[i], "pathway_n" + std::to_string(n) + "_" + std::to_string(i));
    return kExitOk;
  }

  json by_length = json::object();
  for (const auto& [n, pathways] : ps.by_length) {
    json list = json::array();
    for (const Tracelet& t : pathways) list.push_back(to_json(t));
    by_length[std::to_string(n)] = list;
  }
  json report{{"query", query_name},
              {"type", to_string(query->type)},
              {"nmax", query->n_max},
              {"bound", bound_to_json(query->equiv.bound)},
              {"window_cap", query->equiv.window_cap},
              {"pathways", by_length},
              {"diagnostics",
               json{{"inconclusive_condition_checks", ps.diagnostics.inconclusive_condition_checks},
                    {"condition_verdict_splits", ps.diagnostics.condition_verdict_splits},
                    {"notes", ps.diagnostics.notes}}}};
  out << report.dump(2) << "\n";
  return kExitOk;
}

}  // namespace gre
