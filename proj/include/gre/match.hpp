#pragma once

#include <optional>
#include <vector>

#include "gre/morphism.hpp"

namespace gre {

// All injective morphisms dom → cod, sorted lexicographically by (vmap, emap).
// Backtracking with in/out-degree pruning; meant for desk-scale graphs.
std::vector<Morphism> enumerate_monos(const Graph& dom, const Graph& cod);

// All monos q: dom → cod with q ∘ via = target (via: X→dom, target: X→cod).
std::vector<Morphism> enumerate_monos_factoring(const Graph& dom, const Graph& cod,
                                                const Morphism& via, const Morphism& target);

// Every morphism dom → cod, injective or not. Exhaustive; test-oracle scale.
std::vector<Morphism> enumerate_morphisms(const Graph& dom, const Graph& cod);

// An isomorphism witness if one exists.
std::optional<Morphism> isomorphic(const Graph& a, const Graph& b);

std::vector<Morphism> automorphisms(const Graph& g);

// All subgraphs of g as literal graphs with inherited ids, in canonical order
// (by vertex set, then edge set).
std::vector<Graph> enumerate_subgraphs(const Graph& g);

// Subgraphs of g that contain the given literal subgraph.
std::vector<Graph> enumerate_subgraphs_containing(const Graph& g, const Graph& required);

}  // namespace gre
