#pragma once

#include <map>
#include <optional>

#include "gre/graph.hpp"

namespace gre {

// A structure-preserving map between multigraphs: total on the domain and
// commuting with src/tgt. Domain and codomain are held by value, so a
// Morphism is self-contained and freely shareable across threads.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Graph dom, Graph cod, std::map<Id, Id> vmap, std::map<Id, Id> emap);

  static Morphism identity(const Graph& g);

  const Graph& dom() const { return dom_; }
  const Graph& cod() const { return cod_; }
  const std::map<Id, Id>& vmap() const { return vmap_; }
  const std::map<Id, Id>& emap() const { return emap_; }

  Id v(Id vertex) const;
  Id e(Id edge) const;

  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Graph dom_, cod_;
  std::map<Id, Id> vmap_, emap_;
};

// g after f; requires f.cod() == g.dom() as values.
Morphism compose(const Morphism& g, const Morphism& f);

// The inclusion of a literal subgraph (ids shared with the host graph).
Morphism inclusion(const Graph& sub, const Graph& whole);

// The unique u with m∘u = f, for m mono; nullopt when f does not land in the
// image of m.
std::optional<Morphism> factor_through_mono(const Morphism& f, const Morphism& m);

// The inverse of an isomorphism.
Morphism inverse(const Morphism& iso);

// (A ← M → B): left: M→A, right: M→B. The apex is literally shared.
struct Span {
  Morphism left;
  Morphism right;
  const Graph& apex() const { return left.dom(); }
  friend bool operator==(const Span&, const Span&) = default;
};
Span make_span(Morphism left, Morphism right);

// (A → P ← B): left: A→P, right: B→P. The target is literally shared.
struct Cospan {
  Morphism left;
  Morphism right;
  const Graph& target() const { return left.cod(); }
  friend bool operator==(const Cospan&, const Cospan&) = default;
};
Cospan make_cospan(Morphism left, Morphism right);

// Spans with equal feet related by an iso of apexes commuting with both legs.
bool span_isomorphic(const Span& a, const Span& b);

// Total order on morphisms with equal dom/cod, by (vmap, emap); used for
// canonical enumeration order.
bool morphism_less(const Morphism& a, const Morphism& b);

}  // namespace gre
