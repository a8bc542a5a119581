#pragma once

#include <string>

#include "gre/tracelets.hpp"

namespace gre {

// Graphviz exports. Deterministic output: elements in id order, one
// definition per line.
std::string to_dot(const Graph& g, const std::string& name = "G");

// A derivation as a two-row grid: rule row over host row, with the match,
// comatch and interior morphisms drawn between clusters.
std::string to_dot(const DirectDerivation& dd, const std::string& name = "derivation");

// A tracelet as a column-per-step grid: each step shows its rule over the
// interface span it rewrites.
std::string to_dot(const Tracelet& t, const std::string& name = "tracelet");

}  // namespace gre
