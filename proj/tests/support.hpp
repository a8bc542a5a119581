#pragma once

#include <random>
#include <vector>

#include "gre/graph.hpp"
#include "gre/match.hpp"
#include "gre/morphism.hpp"
#include "gre/rules.hpp"

namespace gre::test {

using Rng = std::mt19937_64;

inline unsigned long long seed_from_env(unsigned long long fallback = 20240901ull) {
  if (const char* env = std::getenv("GRE_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

// Small random multigraph with ids 0..nv-1 / 0..ne-1.
inline Graph random_graph(Rng& rng, int max_v, int max_e) {
  std::uniform_int_distribution<int> nv_dist(0, max_v);
  int nv = nv_dist(rng);
  Graph g;
  for (int v = 0; v < nv; ++v) g.add_vertex(v);
  if (nv == 0) return g;
  std::uniform_int_distribution<int> ne_dist(0, max_e);
  std::uniform_int_distribution<Id> pick(0, nv - 1);
  int ne = ne_dist(rng);
  for (int e = 0; e < ne; ++e) g.add_edge(e, pick(rng), pick(rng));
  return g;
}

inline Graph nonempty_random_graph(Rng& rng, int max_v, int max_e) {
  Graph g = random_graph(rng, max_v, max_e);
  if (g.vertex_count() == 0) g.add_vertex(0);
  return g;
}

// Random subgraph of g (ids inherited).
inline Graph random_subgraph(Rng& rng, const Graph& g) {
  std::bernoulli_distribution keep(0.6);
  Graph sub;
  for (Id v : g.vertices())
    if (keep(rng)) sub.add_vertex(v);
  for (const auto& [e, ends] : g.edges())
    if (sub.has_vertex(ends.src) && sub.has_vertex(ends.tgt) && keep(rng))
      sub.add_edge(e, ends.src, ends.tgt);
  return sub;
}

// Random linear rule built around a shared context: K is a common subgraph of
// freshly grown input and output graphs.
inline Rule random_rule(Rng& rng, int max_v, int max_e) {
  Graph input = nonempty_random_graph(rng, max_v, max_e);
  Graph context = random_subgraph(rng, input);
  Graph output = context;
  // Grow the output beyond the context with fresh elements.
  std::uniform_int_distribution<int> grow_v(0, 2), grow_e(0, 2);
  int gv = grow_v(rng);
  for (int i = 0; i < gv; ++i) output.add_vertex(output.fresh_vertex_id());
  if (output.vertex_count() > 0) {
    int ge = grow_e(rng);
    std::uniform_int_distribution<std::size_t> pick(0, output.vertex_count() - 1);
    for (int i = 0; i < ge; ++i)
      output.add_edge(output.fresh_edge_id(), output.vertices()[pick(rng)],
                      output.vertices()[pick(rng)]);
  }
  return Rule{output, context, input, inclusion(context, output), inclusion(context, input)};
}

inline RuleWithConditions random_rule_wc(Rng& rng, int max_v = 3, int max_e = 2) {
  return RuleWithConditions(random_rule(rng, max_v, max_e));
}

// Extends root by a few fresh vertices/edges; the inclusion is the Exists leg.
inline Graph random_extension(Rng& rng, const Graph& root, int extra_v, int extra_e) {
  Graph ext = root;
  std::uniform_int_distribution<int> nv(0, extra_v), ne(0, extra_e);
  int add_v = nv(rng);
  for (int i = 0; i < add_v; ++i) ext.add_vertex(ext.fresh_vertex_id());
  if (ext.vertex_count() > 0) {
    int add_e = ne(rng);
    std::uniform_int_distribution<std::size_t> pick(0, ext.vertex_count() - 1);
    for (int i = 0; i < add_e; ++i)
      ext.add_edge(ext.fresh_edge_id(), ext.vertices()[pick(rng)], ext.vertices()[pick(rng)]);
  }
  return ext;
}

inline Condition random_condition(Rng& rng, const Graph& root, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 4);
  switch (kind(rng)) {
    case 0:
      return Condition::truth(root);
    case 1: {
      Graph ext = random_extension(rng, root, 2, 2);
      return Condition::exists(inclusion(root, ext), random_condition(rng, ext, depth - 1));
    }
    case 2:
      return Condition::negation(random_condition(rng, root, depth - 1));
    case 3: {
      std::vector<Condition> kids;
      std::uniform_int_distribution<int> n(0, 2);
      int count = n(rng);
      for (int i = 0; i < count; ++i) kids.push_back(random_condition(rng, root, depth - 1));
      return Condition::conjunction(root, std::move(kids));
    }
    default: {
      std::vector<Condition> kids;
      std::uniform_int_distribution<int> n(1, 2);
      int count = n(rng);
      for (int i = 0; i < count; ++i) kids.push_back(random_condition(rng, root, depth - 1));
      return Condition::disjunction(root, std::move(kids));
    }
  }
}

}  // namespace gre::test
