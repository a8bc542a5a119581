#include "gre/json_io.hpp"

namespace gre {

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [e, ends] : g.edges())
    edges.push_back({{"id", e}, {"src", ends.src}, {"tgt", ends.tgt}});
  return json{{"vertices", g.vertices()}, {"edges", edges}};
}

json to_json(const Morphism& m) {
  json vmap = json::array(), emap = json::array();
  for (const auto& [k, v] : m.vmap()) vmap.push_back({k, v});
  for (const auto& [k, v] : m.emap()) emap.push_back({k, v});
  return json{{"vmap", vmap}, {"emap", emap}};
}

json to_json(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::True:
      return json{{"op", "true"}};
    case Condition::Kind::Exists:
      return json{{"op", "exists"},
                  {"graph", to_json(c.leg().cod())},
                  {"leg", to_json(c.leg())},
                  {"inner", to_json(c.inner())}};
    case Condition::Kind::Not:
      return json{{"op", "not"}, {"inner", to_json(c.inner())}};
    case Condition::Kind::And:
    case Condition::Kind::Or: {
      json kids = json::array();
      for (const Condition& child : c.children()) kids.push_back(to_json(child));
      return json{{"op", c.kind() == Condition::Kind::And ? "and" : "or"}, {"inner", kids}};
    }
  }
  throw Error("condition serialization: unreachable");
}

json to_json(const Rule& r) {
  return json{{"output", to_json(r.output)}, {"context", to_json(r.context)},
              {"input", to_json(r.input)},   {"o", to_json(r.to_output)},
              {"i", to_json(r.to_input)},    {"cond", nullptr}};
}

json to_json(const RuleWithConditions& r) {
  json j = to_json(r.rule);
  if (!r.cond.is_true()) j["cond"] = to_json(r.cond);
  return j;
}

json to_json(const DirectDerivation& dd) {
  return json{{"type", to_string(dd.type)},
              {"rule", to_json(dd.rule)},
              {"start", to_json(dd.start)},
              {"interior", to_json(dd.interior)},
              {"result", to_json(dd.result)},
              {"match", to_json(dd.match)},
              {"comatch", to_json(dd.comatch)},
              {"to_interior", to_json(dd.to_interior)},
              {"interior_to_start", to_json(dd.interior_to_start)},
              {"interior_to_result", to_json(dd.interior_to_result)}};
}

json to_json(const Tracelet& t) {
  json interfaces = json::array();
  interfaces.push_back(to_json(t.input()));
  for (const auto& col : t.columns) interfaces.push_back(to_json(col.result));
  json columns = json::array();
  for (const auto& col : t.columns) {
    columns.push_back(json{{"rule", to_json(col.rule)},
                           {"interior", to_json(col.interior)},
                           {"match", to_json(col.match)},
                           {"comatch", to_json(col.comatch)},
                           {"to_interior", to_json(col.to_interior)},
                           {"interior_to_start", to_json(col.interior_to_start)},
                           {"interior_to_result", to_json(col.interior_to_result)}});
  }
  json j{{"type", to_string(t.type)},
         {"length", t.length()},
         {"interfaces", interfaces},
         {"columns", columns},
         {"condition", nullptr}};
  if (!t.cond.is_true()) j["condition"] = to_json(t.cond);
  return j;
}

json to_json(const DerivationTrace& tr) {
  json steps = json::array();
  for (const auto& dd : tr.steps) steps.push_back(to_json(dd));
  return json{{"start", to_json(tr.start)}, {"steps", steps}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("graph json: expected object with vertices and edges");
  Graph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.get<Id>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at("id").get<Id>(), e.at("src").get<Id>(), e.at("tgt").get<Id>());
  return g;
}

Morphism morphism_from_json(const Graph& dom, const Graph& cod, const json& j) {
  std::map<Id, Id> vm, em;
  for (const auto& pair : j.at("vmap")) vm[pair.at(0).get<Id>()] = pair.at(1).get<Id>();
  for (const auto& pair : j.at("emap")) em[pair.at(0).get<Id>()] = pair.at(1).get<Id>();
  return Morphism(dom, cod, std::move(vm), std::move(em));
}

Condition condition_from_json(const Graph& root, const json& j) {
  if (j.is_null()) return Condition::truth(root);
  const std::string op = j.at("op").get<std::string>();
  if (op == "true") return Condition::truth(root);
  if (op == "exists") {
    Graph target = graph_from_json(j.at("graph"));
    Morphism leg = morphism_from_json(root, target, j.at("leg"));
    return Condition::exists(leg, condition_from_json(target, j.at("inner")));
  }
  if (op == "not") return Condition::negation(condition_from_json(root, j.at("inner")));
  if (op == "and" || op == "or") {
    std::vector<Condition> kids;
    for (const auto& child : j.at("inner")) kids.push_back(condition_from_json(root, child));
    return op == "and" ? Condition::conjunction(root, std::move(kids))
                       : Condition::disjunction(root, std::move(kids));
  }
  throw Error("condition json: unknown op '" + op + "'");
}

RuleWithConditions rule_from_json(const json& j) {
  Graph output = graph_from_json(j.at("output"));
  Graph context = graph_from_json(j.at("context"));
  Graph input = graph_from_json(j.at("input"));
  Morphism o = morphism_from_json(context, output, j.at("o"));
  Morphism i = morphism_from_json(context, input, j.at("i"));
  Rule rule{std::move(output), std::move(context), std::move(input), std::move(o), std::move(i)};
  Condition cond = j.contains("cond") ? condition_from_json(rule.input, j.at("cond"))
                                      : Condition::truth(rule.input);
  return RuleWithConditions(std::move(rule), std::move(cond));
}

RewriteType rewrite_type_from_string(const std::string& s) {
  if (s == "dpo") return RewriteType::Dpo;
  if (s == "sqpo") return RewriteType::Sqpo;
  if (s == "dpo-dagger") return RewriteType::DpoDagger;
  throw Error("unknown rewrite type '" + s + "'");
}

std::string canonical_key(const Tracelet& t) { return to_json(t).dump(); }

}  // namespace gre
