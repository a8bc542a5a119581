#include "gre/match.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gre {

namespace {

struct Pin {
  std::map<Id, Id> v, e;
};

// Builds the pin for "monos q with q∘via = target". Returns false on an
// inconsistent pin (no factorization can exist).
bool pin_from_factoring(const Morphism& via, const Morphism& target, Pin& pin) {
  for (const auto& [x, a] : via.vmap()) {
    Id want = target.v(x);
    auto it = pin.v.find(a);
    if (it != pin.v.end() && it->second != want) return false;
    pin.v[a] = want;
  }
  for (const auto& [x, a] : via.emap()) {
    Id want = target.e(x);
    auto it = pin.e.find(a);
    if (it != pin.e.end() && it->second != want) return false;
    pin.e[a] = want;
  }
  // Injectivity of the pinned part.
  std::set<Id> vs, es;
  for (const auto& [k, x] : pin.v)
    if (!vs.insert(x).second) return false;
  for (const auto& [k, x] : pin.e)
    if (!es.insert(x).second) return false;
  return true;
}

struct MonoSearch {
  const Graph& A;
  const Graph& B;
  const Pin* pin;
  const std::function<bool(Morphism&&)>& sink;

  std::map<Id, Id> vm;
  std::set<Id> used;
  bool stopped = false;

  bool degree_ok(Id a, Id b) const {
    return B.out_degree(b) >= A.out_degree(a) && B.in_degree(b) >= A.in_degree(a) &&
           B.loop_count(b) >= A.loop_count(a);
  }

  void assign_vertices(std::size_t idx) {
    if (stopped) return;
    const auto& verts = A.vertices();
    if (idx == verts.size()) {
      assign_edges();
      return;
    }
    Id a = verts[idx];
    if (pin) {
      auto it = pin->v.find(a);
      if (it != pin->v.end()) {
        Id b = it->second;
        if (used.count(b) || !B.has_vertex(b) || !degree_ok(a, b)) return;
        vm[a] = b;
        used.insert(b);
        assign_vertices(idx + 1);
        used.erase(b);
        vm.erase(a);
        return;
      }
    }
    for (Id b : B.vertices()) {
      if (used.count(b) || !degree_ok(a, b)) continue;
      vm[a] = b;
      used.insert(b);
      assign_vertices(idx + 1);
      used.erase(b);
      vm.erase(a);
      if (stopped) return;
    }
  }

  using Assignment = std::vector<std::pair<Id, Id>>;

  void assign_edges() {
    // Group domain edges by endpoint pair; images live in disjoint groups
    // because the vertex map is injective.
    std::map<std::pair<Id, Id>, std::vector<Id>> groups;
    for (const auto& [e, ends] : A.edges()) groups[{ends.src, ends.tgt}].push_back(e);

    std::vector<std::vector<Assignment>> alternatives;  // per group
    for (const auto& [ends, aedges] : groups) {
      std::vector<Id> candidates = B.edges_between(vm.at(ends.first), vm.at(ends.second));
      if (candidates.size() < aedges.size()) return;

      std::vector<Assignment> injections;
      Assignment current;
      std::set<Id> taken;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == aedges.size()) {
          injections.push_back(current);
          return;
        }
        Id ae = aedges[i];
        if (pin) {
          auto it = pin->e.find(ae);
          if (it != pin->e.end()) {
            Id be = it->second;
            if (taken.count(be) ||
                std::find(candidates.begin(), candidates.end(), be) == candidates.end())
              return;
            current.push_back({ae, be});
            taken.insert(be);
            rec(i + 1);
            taken.erase(be);
            current.pop_back();
            return;
          }
        }
        for (Id be : candidates) {
          if (taken.count(be)) continue;
          current.push_back({ae, be});
          taken.insert(be);
          rec(i + 1);
          taken.erase(be);
          current.pop_back();
        }
      };
      rec(0);
      if (injections.empty()) return;
      alternatives.push_back(std::move(injections));
    }

    std::map<Id, Id> em;
    emit_products(alternatives, 0, em);
  }

  void emit_products(const std::vector<std::vector<Assignment>>& alternatives, std::size_t g,
                     std::map<Id, Id>& em) {
    if (stopped) return;
    if (g == alternatives.size()) {
      Morphism m(A, B, vm, em);
      if (!sink(std::move(m))) stopped = true;
      return;
    }
    for (const Assignment& choice : alternatives[g]) {
      for (const auto& p : choice) em[p.first] = p.second;
      emit_products(alternatives, g + 1, em);
      for (const auto& p : choice) em.erase(p.first);
      if (stopped) return;
    }
  }
};

void for_each_mono(const Graph& A, const Graph& B, const Pin* pin,
                   const std::function<bool(Morphism&&)>& sink) {
  if (A.vertex_count() > B.vertex_count() || A.edge_count() > B.edge_count()) return;
  MonoSearch search{A, B, pin, sink, {}, {}};
  search.assign_vertices(0);
}

std::vector<Morphism> collect_monos(const Graph& A, const Graph& B, const Pin* pin) {
  std::vector<Morphism> out;
  for_each_mono(A, B, pin, [&](Morphism&& m) {
    out.push_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end(), morphism_less);
  return out;
}

}  // namespace

std::vector<Morphism> enumerate_monos(const Graph& dom, const Graph& cod) {
  return collect_monos(dom, cod, nullptr);
}

std::vector<Morphism> enumerate_monos_factoring(const Graph& dom, const Graph& cod,
                                                const Morphism& via, const Morphism& target) {
  if (!(via.cod() == dom)) throw Error("enumerate_monos_factoring: via does not land in dom");
  if (!(target.cod() == cod)) throw Error("enumerate_monos_factoring: target does not land in cod");
  if (!(via.dom() == target.dom())) throw Error("enumerate_monos_factoring: domains differ");
  Pin pin;
  if (!pin_from_factoring(via, target, pin)) return {};
  return collect_monos(dom, cod, &pin);
}

std::vector<Morphism> enumerate_morphisms(const Graph& dom, const Graph& cod) {
  std::vector<Morphism> out;
  if (dom.vertex_count() > 0 && cod.vertex_count() == 0) return out;

  const auto& verts = dom.vertices();
  std::map<Id, Id> vm;
  std::function<void(std::size_t)> vertex_rec = [&](std::size_t idx) {
    if (idx == verts.size()) {
      // Per-edge candidate lists; product over them.
      std::vector<std::pair<Id, std::vector<Id>>> slots;
      for (const auto& [e, ends] : dom.edges()) {
        std::vector<Id> cands = cod.edges_between(vm.at(ends.src), vm.at(ends.tgt));
        if (cands.empty()) return;
        slots.push_back({e, std::move(cands)});
      }
      std::map<Id, Id> em;
      std::function<void(std::size_t)> edge_rec = [&](std::size_t s) {
        if (s == slots.size()) {
          out.emplace_back(dom, cod, vm, em);
          return;
        }
        for (Id be : slots[s].second) {
          em[slots[s].first] = be;
          edge_rec(s + 1);
        }
        em.erase(slots[s].first);
      };
      edge_rec(0);
      return;
    }
    for (Id b : cod.vertices()) {
      vm[verts[idx]] = b;
      vertex_rec(idx + 1);
    }
    vm.erase(verts[idx]);
  };
  vertex_rec(0);
  std::sort(out.begin(), out.end(), morphism_less);
  return out;
}

std::optional<Morphism> isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  std::optional<Morphism> found;
  for_each_mono(a, b, nullptr, [&](Morphism&& m) {
    found = std::move(m);
    return false;
  });
  return found;
}

std::vector<Morphism> automorphisms(const Graph& g) {
  // Injective endomorphisms of a finite graph are automorphisms.
  return enumerate_monos(g, g);
}

std::vector<Graph> enumerate_subgraphs(const Graph& g) {
  return enumerate_subgraphs_containing(g, initial_object());
}

std::vector<Graph> enumerate_subgraphs_containing(const Graph& g, const Graph& required) {
  if (g.vertex_count() > 20 || g.edge_count() > 20)
    throw Error("enumerate_subgraphs: graph too large for exhaustive enumeration");
  for (Id v : required.vertices())
    if (!g.has_vertex(v)) throw Error("enumerate_subgraphs: required vertex missing from host");
  for (const auto& [e, ends] : required.edges())
    if (!g.has_edge(e) || !(g.edge(e) == ends))
      throw Error("enumerate_subgraphs: required edge missing from host");

  std::vector<Id> free_vertices;
  for (Id v : g.vertices())
    if (!required.has_vertex(v)) free_vertices.push_back(v);

  std::vector<Graph> out;
  const std::size_t nv = free_vertices.size();
  for (std::size_t vmask = 0; vmask < (std::size_t{1} << nv); ++vmask) {
    Graph base;
    for (Id v : required.vertices()) base.add_vertex(v);
    for (std::size_t i = 0; i < nv; ++i)
      if (vmask & (std::size_t{1} << i)) base.add_vertex(free_vertices[i]);

    std::vector<std::pair<Id, EdgeEnds>> candidate_edges;
    for (const auto& [e, ends] : g.edges())
      if (!required.has_edge(e) && base.has_vertex(ends.src) && base.has_vertex(ends.tgt))
        candidate_edges.push_back({e, ends});
    if (candidate_edges.size() > 20)
      throw Error("enumerate_subgraphs: too many candidate edges");

    const std::size_t ne = candidate_edges.size();
    for (std::size_t emask = 0; emask < (std::size_t{1} << ne); ++emask) {
      Graph sub = base;
      for (const auto& [e, ends] : required.edges()) sub.add_edge(e, ends.src, ends.tgt);
      for (std::size_t i = 0; i < ne; ++i)
        if (emask & (std::size_t{1} << i))
          sub.add_edge(candidate_edges[i].first, candidate_edges[i].second.src,
                       candidate_edges[i].second.tgt);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

bool span_isomorphic(const Span& a, const Span& b) {
  if (!(a.left.cod() == b.left.cod()) || !(a.right.cod() == b.right.cod())) return false;
  if (a.apex().vertex_count() != b.apex().vertex_count() ||
      a.apex().edge_count() != b.apex().edge_count())
    return false;
  for (const Morphism& iso : enumerate_monos(a.apex(), b.apex())) {
    if (!iso.is_iso()) continue;
    if (compose(b.left, iso) == a.left && compose(b.right, iso) == a.right) return true;
  }
  return false;
}

}  // namespace gre
