#pragma once

#include <vector>

#include "gre/graph.hpp"

namespace gre {

// Size limits for the bounded condition model checks. Condition equivalence
// quantifies over all extensions; we check it over every multigraph within
// these limits, up to isomorphism, and report the bound alongside verdicts.
struct SizeBound {
  int max_vertices = 4;
  int max_edges = 4;
  int max_parallel = 2;

  static SizeBound for_root(const Graph& root);

  friend bool operator==(const SizeBound&, const SizeBound&) = default;
  friend auto operator<=>(const SizeBound&, const SizeBound&) = default;
};

// All multigraphs within the bound, one representative per isomorphism class.
// Results are memoized per bound; the returned reference stays valid.
const std::vector<Graph>& enumerate_graphs_upto_iso(const SizeBound& bound);

}  // namespace gre
