#include "gre/morphism.hpp"

#include <set>

namespace gre {

Morphism::Morphism(Graph dom, Graph cod, std::map<Id, Id> vmap, std::map<Id, Id> emap)
    : dom_(std::move(dom)), cod_(std::move(cod)), vmap_(std::move(vmap)), emap_(std::move(emap)) {
  for (Id v : dom_.vertices()) {
    auto it = vmap_.find(v);
    if (it == vmap_.end()) throw Error("morphism not total on vertex " + std::to_string(v));
    if (!cod_.has_vertex(it->second))
      throw Error("vertex image " + std::to_string(it->second) + " missing in codomain");
  }
  if (vmap_.size() != dom_.vertex_count()) throw Error("vmap mentions foreign vertices");
  for (const auto& [e, ends] : dom_.edges()) {
    auto it = emap_.find(e);
    if (it == emap_.end()) throw Error("morphism not total on edge " + std::to_string(e));
    if (!cod_.has_edge(it->second))
      throw Error("edge image " + std::to_string(it->second) + " missing in codomain");
    EdgeEnds image = cod_.edge(it->second);
    if (image.src != vmap_.at(ends.src) || image.tgt != vmap_.at(ends.tgt))
      throw Error("morphism does not commute with src/tgt on edge " + std::to_string(e));
  }
  if (emap_.size() != dom_.edge_count()) throw Error("emap mentions foreign edges");
}

Morphism Morphism::identity(const Graph& g) {
  std::map<Id, Id> vm, em;
  for (Id v : g.vertices()) vm[v] = v;
  for (const auto& [e, ends] : g.edges()) em[e] = e;
  return Morphism(g, g, std::move(vm), std::move(em));
}

Id Morphism::v(Id vertex) const {
  auto it = vmap_.find(vertex);
  if (it == vmap_.end()) throw Error("vertex " + std::to_string(vertex) + " not in domain");
  return it->second;
}

Id Morphism::e(Id edge) const {
  auto it = emap_.find(edge);
  if (it == emap_.end()) throw Error("edge " + std::to_string(edge) + " not in domain");
  return it->second;
}

bool Morphism::is_mono() const {
  std::set<Id> vs, es;
  for (const auto& [k, x] : vmap_) vs.insert(x);
  for (const auto& [k, x] : emap_) es.insert(x);
  return vs.size() == vmap_.size() && es.size() == emap_.size();
}

bool Morphism::is_epi() const {
  std::set<Id> vs, es;
  for (const auto& [k, x] : vmap_) vs.insert(x);
  for (const auto& [k, x] : emap_) es.insert(x);
  return vs.size() == cod_.vertex_count() && es.size() == cod_.edge_count();
}

bool Morphism::is_iso() const { return is_mono() && is_epi(); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.cod() == g.dom())) throw Error("compose: middle objects differ");
  std::map<Id, Id> vm, em;
  for (const auto& [k, x] : f.vmap()) vm[k] = g.v(x);
  for (const auto& [k, x] : f.emap()) em[k] = g.e(x);
  return Morphism(f.dom(), g.cod(), std::move(vm), std::move(em));
}

Morphism inclusion(const Graph& sub, const Graph& whole) {
  std::map<Id, Id> vm, em;
  for (Id v : sub.vertices()) vm[v] = v;
  for (const auto& [e, ends] : sub.edges()) em[e] = e;
  return Morphism(sub, whole, std::move(vm), std::move(em));
}

std::optional<Morphism> factor_through_mono(const Morphism& f, const Morphism& m) {
  if (!(f.cod() == m.cod())) throw Error("factor_through_mono: codomains differ");
  if (!m.is_mono()) throw Error("factor_through_mono: right factor is not mono");
  std::map<Id, Id> vinv, einv;
  for (const auto& [k, x] : m.vmap()) vinv[x] = k;
  for (const auto& [k, x] : m.emap()) einv[x] = k;
  std::map<Id, Id> vm, em;
  for (const auto& [k, x] : f.vmap()) {
    auto it = vinv.find(x);
    if (it == vinv.end()) return std::nullopt;
    vm[k] = it->second;
  }
  for (const auto& [k, x] : f.emap()) {
    auto it = einv.find(x);
    if (it == einv.end()) return std::nullopt;
    em[k] = it->second;
  }
  return Morphism(f.dom(), m.dom(), std::move(vm), std::move(em));
}

Morphism inverse(const Morphism& iso) {
  if (!iso.is_iso()) throw Error("inverse: morphism is not an isomorphism");
  std::map<Id, Id> vm, em;
  for (const auto& [k, x] : iso.vmap()) vm[x] = k;
  for (const auto& [k, x] : iso.emap()) em[x] = k;
  return Morphism(iso.cod(), iso.dom(), std::move(vm), std::move(em));
}

Span make_span(Morphism left, Morphism right) {
  if (!(left.dom() == right.dom())) throw Error("span legs must share their apex");
  return Span{std::move(left), std::move(right)};
}

Cospan make_cospan(Morphism left, Morphism right) {
  if (!(left.cod() == right.cod())) throw Error("cospan legs must share their target");
  return Cospan{std::move(left), std::move(right)};
}

bool morphism_less(const Morphism& a, const Morphism& b) {
  if (a.vmap() != b.vmap()) return a.vmap() < b.vmap();
  return a.emap() < b.emap();
}

}  // namespace gre
