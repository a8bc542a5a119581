#include "gre/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "gre/match.hpp"

namespace gre {

SizeBound SizeBound::for_root(const Graph& root) {
  SizeBound b;
  b.max_vertices = std::min<int>(static_cast<int>(root.vertex_count()) + 3, 5);
  b.max_vertices = std::max<int>(b.max_vertices, static_cast<int>(root.vertex_count()) + 1);
  b.max_edges = std::min<int>(static_cast<int>(root.edge_count()) + 3, 5);
  b.max_edges = std::max<int>(b.max_edges, static_cast<int>(root.edge_count()) + 1);
  int par = 1;
  for (const auto& [e, ends] : root.edges())
    par = std::max<int>(par, static_cast<int>(root.edges_between(ends.src, ends.tgt).size()));
  b.max_parallel = std::min(par + 1, 3);
  return b;
}

namespace {

// Cheap iso invariant used to bucket candidates before full iso checks.
std::string invariant_key(const Graph& g) {
  std::vector<std::string> profile;
  for (Id v : g.vertices()) {
    std::ostringstream os;
    os << g.out_degree(v) << ':' << g.in_degree(v) << ':' << g.loop_count(v);
    profile.push_back(os.str());
  }
  std::sort(profile.begin(), profile.end());
  std::ostringstream os;
  os << g.vertex_count() << '/' << g.edge_count() << '|';
  for (const auto& p : profile) os << p << ',';
  return os.str();
}

std::vector<Graph> generate(const SizeBound& bound) {
  std::vector<Graph> kept;
  std::map<std::string, std::vector<std::size_t>> buckets;

  auto consider = [&](const Graph& g) {
    std::string key = invariant_key(g);
    for (std::size_t idx : buckets[key])
      if (isomorphic(kept[idx], g)) return;
    buckets[key].push_back(kept.size());
    kept.push_back(g);
  };

  for (int nv = 0; nv <= bound.max_vertices; ++nv) {
    Graph base;
    for (int v = 0; v < nv; ++v) base.add_vertex(v);

    std::vector<std::pair<Id, Id>> slots;
    for (int s = 0; s < nv; ++s)
      for (int t = 0; t < nv; ++t) slots.push_back({s, t});

    std::vector<int> counts(slots.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int budget) {
      if (slot == slots.size()) {
        Graph g = base;
        Id e = 0;
        for (std::size_t i = 0; i < slots.size(); ++i)
          for (int c = 0; c < counts[i]; ++c) g.add_edge(e++, slots[i].first, slots[i].second);
        consider(g);
        return;
      }
      for (int c = 0; c <= std::min(budget, bound.max_parallel); ++c) {
        counts[slot] = c;
        rec(slot + 1, budget - c);
      }
      counts[slot] = 0;
    };
    if (slots.empty()) {
      consider(base);
    } else {
      rec(0, bound.max_edges);
    }
  }
  return kept;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs_upto_iso(const SizeBound& bound) {
  static std::mutex mu;
  static std::map<SizeBound, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, generate(bound)).first;
  return it->second;
}

}  // namespace gre
