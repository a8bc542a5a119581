#include "gre/grammar.hpp"

#include <sstream>

namespace gre {

namespace {

SizeBound bound_from_json(const json& j) {
  SizeBound b;
  b.max_vertices = j.value("max_vertices", b.max_vertices);
  b.max_edges = j.value("max_edges", b.max_edges);
  b.max_parallel = j.value("max_parallel", b.max_parallel);
  return b;
}

json bound_to_json(const SizeBound& b) {
  return json{{"max_vertices", b.max_vertices},
              {"max_edges", b.max_edges},
              {"max_parallel", b.max_parallel}};
}

}  // namespace

GrammarFile grammar_from_json(const json& j) {
  if (!j.is_object()) throw Error("grammar: top level must be an object");
  GrammarFile g;
  if (j.contains("graphs"))
    for (const auto& [name, body] : j.at("graphs").items()) {
      try {
        g.graphs.emplace(name, graph_from_json(body));
      } catch (const Error& e) {
        throw Error("graph '" + name + "': " + e.what());
      }
    }
  if (j.contains("rules"))
    for (const auto& [name, body] : j.at("rules").items()) {
      try {
        g.rules.emplace(name, rule_from_json(body));
      } catch (const Error& e) {
        throw Error("rule '" + name + "': " + e.what());
      }
    }
  if (j.contains("queries"))
    for (const auto& [name, body] : j.at("queries").items()) {
      QuerySpec q;
      q.target = body.at("target").get<std::string>();
      for (const auto& t : body.at("transitions")) q.transitions.push_back(t.get<std::string>());
      q.n_max = body.value("nmax", 2);
      q.type = rewrite_type_from_string(body.value("type", std::string("dpo")));
      if (body.contains("bound")) q.bound = bound_from_json(body.at("bound"));
      if (body.contains("window_cap")) q.window_cap = body.at("window_cap").get<int>();
      if (!g.rules.count(q.target))
        throw Error("query '" + name + "': unresolved target rule '" + q.target + "'");
      for (const std::string& t : q.transitions)
        if (!g.rules.count(t))
          throw Error("query '" + name + "': unresolved transition rule '" + t + "'");
      g.queries.emplace(name, std::move(q));
    }
  return g;
}

std::vector<std::string> validate_grammar(const json& j) {
  std::vector<std::string> problems;
  if (!j.is_object()) return {"top level must be an object"};

  if (j.contains("graphs"))
    for (const auto& [name, body] : j.at("graphs").items()) {
      try {
        graph_from_json(body);
      } catch (const std::exception& e) {
        problems.push_back("graph '" + name + "': " + e.what());
      }
    }
  if (j.contains("rules"))
    for (const auto& [name, body] : j.at("rules").items()) {
      try {
        rule_from_json(body);
      } catch (const std::exception& e) {
        problems.push_back("rule '" + name + "': " + e.what());
      }
    }
  if (problems.empty()) {
    try {
      grammar_from_json(j);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
  }
  return problems;
}

json to_json(const GrammarFile& g) {
  json graphs = json::object(), rules = json::object(), queries = json::object();
  for (const auto& [name, graph] : g.graphs) graphs[name] = to_json(graph);
  for (const auto& [name, rule] : g.rules) rules[name] = to_json(rule);
  for (const auto& [name, q] : g.queries) {
    json body{{"target", q.target},
              {"transitions", q.transitions},
              {"nmax", q.n_max},
              {"type", to_string(q.type)}};
    if (q.bound) body["bound"] = bound_to_json(*q.bound);
    if (q.window_cap) body["window_cap"] = *q.window_cap;
    queries[name] = body;
  }
  return json{{"graphs", graphs}, {"rules", rules}, {"queries", queries}};
}

PathwayQuery build_query(const GrammarFile& g, const std::string& name,
                         std::optional<SizeBound> bound_override,
                         std::optional<int> nmax_override) {
  auto it = g.queries.find(name);
  if (it == g.queries.end()) throw Error("unresolved query '" + name + "'");
  const QuerySpec& spec = it->second;

  PathwayQuery q(g.rules.at(spec.target));
  for (const std::string& t : spec.transitions) q.transitions.push_back(g.rules.at(t));
  q.n_max = nmax_override.value_or(spec.n_max);
  q.type = spec.type;
  if (bound_override)
    q.equiv.bound = *bound_override;
  else if (spec.bound)
    q.equiv.bound = *spec.bound;
  else
    q.equiv.bound = SizeBound::for_root(q.target.rule.input);
  if (spec.window_cap) q.equiv.window_cap = *spec.window_cap;
  return q;
}

}  // namespace gre
