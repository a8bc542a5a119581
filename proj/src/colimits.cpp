#include "gre/colimits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace gre {

namespace {

// Tagged element: side 0 = left foot (B), side 1 = right foot (C).
using Elem = std::pair<int, Id>;

class UnionFind {
 public:
  void add(Elem x) { parent_.emplace(x, x); }
  Elem find(Elem x) {
    Elem root = x;
    while (!(parent_.at(root) == root)) root = parent_.at(root);
    while (!(parent_.at(x) == root)) {
      Elem next = parent_.at(x);
      parent_.at(x) = root;
      x = next;
    }
    return root;
  }
  void merge(Elem a, Elem b) {
    Elem ra = find(a), rb = find(b);
    if (!(ra == rb)) parent_.at(std::max(ra, rb)) = std::min(ra, rb);
  }
  std::map<Elem, std::vector<Elem>> classes() {
    std::map<Elem, std::vector<Elem>> out;
    for (const auto& [x, p] : parent_) out[find(x)].push_back(x);
    return out;
  }

 private:
  std::map<Elem, Elem> parent_;
};

// Deterministic quotient ids: classes with a B-member keep the least B-id,
// C-only classes get ids past max(B) ordered by least C-id.
std::map<Elem, Id> assign_class_ids(std::map<Elem, std::vector<Elem>>& classes, Id fresh_start) {
  std::map<Elem, Id> id_of_root;
  std::vector<std::pair<Id, Elem>> c_only;  // (least C-id, root)
  for (auto& [root, members] : classes) {
    std::optional<Id> least_b;
    Id least_c = 0;
    bool has_c = false;
    for (const Elem& m : members) {
      if (m.first == 0) {
        if (!least_b || m.second < *least_b) least_b = m.second;
      } else if (!has_c || m.second < least_c) {
        least_c = m.second;
        has_c = true;
      }
    }
    if (least_b)
      id_of_root[root] = *least_b;
    else
      c_only.push_back({least_c, root});
  }
  std::sort(c_only.begin(), c_only.end());
  Id next = fresh_start;
  for (const auto& [key, root] : c_only) id_of_root[root] = next++;
  return id_of_root;
}

}  // namespace

PushoutResult pushout(const Span& s) {
  const Graph& K = s.apex();
  const Graph& B = s.left.cod();
  const Graph& C = s.right.cod();

  UnionFind vuf, euf;
  for (Id v : B.vertices()) vuf.add({0, v});
  for (Id v : C.vertices()) vuf.add({1, v});
  for (const auto& [e, ends] : B.edges()) euf.add({0, e});
  for (const auto& [e, ends] : C.edges()) euf.add({1, e});
  for (Id k : K.vertices()) vuf.merge({0, s.left.v(k)}, {1, s.right.v(k)});
  for (const auto& [k, ends] : K.edges()) euf.merge({0, s.left.e(k)}, {1, s.right.e(k)});

  auto vclasses = vuf.classes();
  auto eclasses = euf.classes();
  auto vid = assign_class_ids(vclasses, B.fresh_vertex_id());
  auto eid = assign_class_ids(eclasses, B.fresh_edge_id());

  auto vertex_class = [&](int side, Id v) { return vid.at(vuf.find({side, v})); };
  auto edge_class = [&](int side, Id e) { return eid.at(euf.find({side, e})); };

  Graph P;
  {
    std::set<Id> vs;
    for (const auto& [root, members] : vclasses) vs.insert(vid.at(root));
    for (Id v : vs) P.add_vertex(v);
    // Each edge class inherits endpoints from any member; members agree
    // because src/tgt commute through the gluing.
    std::map<Id, EdgeEnds> es;
    for (const auto& [root, members] : eclasses) {
      const Elem& m = members.front();
      EdgeEnds ends = m.first == 0 ? B.edge(m.second) : C.edge(m.second);
      es[eid.at(root)] = EdgeEnds{vertex_class(m.first, ends.src), vertex_class(m.first, ends.tgt)};
    }
    for (const auto& [e, ends] : es) P.add_edge(e, ends.src, ends.tgt);
  }

  std::map<Id, Id> bvm, bem, cvm, cem;
  for (Id v : B.vertices()) bvm[v] = vertex_class(0, v);
  for (const auto& [e, ends] : B.edges()) bem[e] = edge_class(0, e);
  for (Id v : C.vertices()) cvm[v] = vertex_class(1, v);
  for (const auto& [e, ends] : C.edges()) cem[e] = edge_class(1, e);

  return PushoutResult{P, Morphism(B, P, std::move(bvm), std::move(bem)),
                       Morphism(C, P, std::move(cvm), std::move(cem))};
}

std::optional<Morphism> pushout_mediate(const Span& s, const PushoutResult& po, const Morphism& f,
                                        const Morphism& g) {
  if (!(f.dom() == s.left.cod()) || !(g.dom() == s.right.cod())) return std::nullopt;
  if (!(f.cod() == g.cod())) return std::nullopt;
  if (!(compose(f, s.left) == compose(g, s.right))) return std::nullopt;

  std::map<Id, Id> vm, em;
  for (const auto& [b, p] : po.left.vmap()) vm[p] = f.v(b);
  for (const auto& [c, p] : po.right.vmap()) {
    auto it = vm.find(p);
    if (it != vm.end() && it->second != g.v(c)) return std::nullopt;
    vm[p] = g.v(c);
  }
  for (const auto& [b, p] : po.left.emap()) em[p] = f.e(b);
  for (const auto& [c, p] : po.right.emap()) {
    auto it = em.find(p);
    if (it != em.end() && it->second != g.e(c)) return std::nullopt;
    em[p] = g.e(c);
  }
  return Morphism(po.object, f.cod(), std::move(vm), std::move(em));
}

PullbackResult pullback(const Cospan& c) {
  const Graph& B = c.left.dom();
  const Graph& C = c.right.dom();

  std::vector<std::pair<Id, Id>> vpairs;
  for (Id b : B.vertices())
    for (Id cc : C.vertices())
      if (c.left.v(b) == c.right.v(cc)) vpairs.push_back({b, cc});
  std::sort(vpairs.begin(), vpairs.end());

  std::map<std::pair<Id, Id>, Id> vindex;
  Graph P;
  for (std::size_t i = 0; i < vpairs.size(); ++i) {
    vindex[vpairs[i]] = static_cast<Id>(i);
    P.add_vertex(static_cast<Id>(i));
  }

  std::vector<std::pair<Id, Id>> epairs;
  for (const auto& [eb, endsb] : B.edges())
    for (const auto& [ec, endsc] : C.edges())
      if (c.left.e(eb) == c.right.e(ec)) epairs.push_back({eb, ec});
  std::sort(epairs.begin(), epairs.end());

  std::map<Id, Id> lvm, lem, rvm, rem;
  for (const auto& [pair, idx] : vindex) {
    lvm[idx] = pair.first;
    rvm[idx] = pair.second;
  }
  for (std::size_t i = 0; i < epairs.size(); ++i) {
    Id e = static_cast<Id>(i);
    const auto& [eb, ec] = epairs[i];
    EdgeEnds endsb = B.edge(eb), endsc = C.edge(ec);
    P.add_edge(e, vindex.at({endsb.src, endsc.src}), vindex.at({endsb.tgt, endsc.tgt}));
    lem[e] = eb;
    rem[e] = ec;
  }

  return PullbackResult{P, Morphism(P, B, std::move(lvm), std::move(lem)),
                        Morphism(P, C, std::move(rvm), std::move(rem))};
}

std::optional<Morphism> pullback_mediate(const Cospan& c, const PullbackResult& pb,
                                         const Morphism& p, const Morphism& q) {
  if (!(p.dom() == q.dom())) return std::nullopt;
  if (!(p.cod() == c.left.dom()) || !(q.cod() == c.right.dom())) return std::nullopt;
  if (!(compose(c.left, p) == compose(c.right, q))) return std::nullopt;

  std::map<std::pair<Id, Id>, Id> vindex, eindex;
  for (Id x : pb.apex.vertices()) vindex[{pb.left.v(x), pb.right.v(x)}] = x;
  for (const auto& [x, ends] : pb.apex.edges()) eindex[{pb.left.e(x), pb.right.e(x)}] = x;

  std::map<Id, Id> vm, em;
  for (Id z : p.dom().vertices()) vm[z] = vindex.at({p.v(z), q.v(z)});
  for (const auto& [z, ends] : p.dom().edges()) em[z] = eindex.at({p.e(z), q.e(z)});
  return Morphism(p.dom(), pb.apex, std::move(vm), std::move(em));
}

std::optional<ComplementResult> pushout_complement(const Morphism& a, const Morphism& m) {
  if (!(a.cod() == m.dom())) throw Error("pushout_complement: morphisms not composable");
  if (!a.is_mono() || !m.is_mono()) throw Error("pushout_complement: legs must be mono");
  const Graph& K = a.dom();
  const Graph& I = a.cod();
  const Graph& X = m.cod();

  std::set<Id> kept_v, kept_e;  // images of K inside X
  for (Id k : K.vertices()) kept_v.insert(m.v(a.v(k)));
  for (const auto& [k, ends] : K.edges()) kept_e.insert(m.e(a.e(k)));

  std::set<Id> del_v, del_e;
  for (Id i : I.vertices()) {
    Id img = m.v(i);
    if (!kept_v.count(img)) del_v.insert(img);
  }
  for (const auto& [i, ends] : I.edges()) {
    Id img = m.e(i);
    if (!kept_e.count(img)) del_e.insert(img);
  }

  // Dangling condition: every surviving edge keeps both endpoints.
  for (const auto& [e, ends] : X.edges()) {
    if (del_e.count(e)) continue;
    if (del_v.count(ends.src) || del_v.count(ends.tgt)) return std::nullopt;
  }

  Graph D;
  for (Id v : X.vertices())
    if (!del_v.count(v)) D.add_vertex(v);
  for (const auto& [e, ends] : X.edges())
    if (!del_e.count(e)) D.add_edge(e, ends.src, ends.tgt);

  std::map<Id, Id> kvm, kem;
  for (Id k : K.vertices()) kvm[k] = m.v(a.v(k));
  for (const auto& [k, ends] : K.edges()) kem[k] = m.e(a.e(k));

  return ComplementResult{D, Morphism(K, D, std::move(kvm), std::move(kem)), inclusion(D, X)};
}

ComplementResult final_pullback_complement(const Morphism& a, const Morphism& m) {
  if (!(a.cod() == m.dom())) throw Error("final_pullback_complement: morphisms not composable");
  if (!a.is_mono() || !m.is_mono()) throw Error("final_pullback_complement: legs must be mono");
  const Graph& K = a.dom();
  const Graph& I = a.cod();
  const Graph& X = m.cod();

  std::set<Id> kept_v, kept_e;
  for (Id k : K.vertices()) kept_v.insert(m.v(a.v(k)));
  for (const auto& [k, ends] : K.edges()) kept_e.insert(m.e(a.e(k)));

  std::set<Id> del_v, del_e;
  for (Id i : I.vertices()) {
    Id img = m.v(i);
    if (!kept_v.count(img)) del_v.insert(img);
  }
  for (const auto& [i, ends] : I.edges()) {
    Id img = m.e(i);
    if (!kept_e.count(img)) del_e.insert(img);
  }
  // Side-effect deletion of edges left dangling by vertex removal.
  for (const auto& [e, ends] : X.edges())
    if (del_v.count(ends.src) || del_v.count(ends.tgt)) del_e.insert(e);

  Graph D;
  for (Id v : X.vertices())
    if (!del_v.count(v)) D.add_vertex(v);
  for (const auto& [e, ends] : X.edges())
    if (!del_e.count(e)) D.add_edge(e, ends.src, ends.tgt);

  std::map<Id, Id> kvm, kem;
  for (Id k : K.vertices()) kvm[k] = m.v(a.v(k));
  for (const auto& [k, ends] : K.edges()) kem[k] = m.e(a.e(k));

  return ComplementResult{D, Morphism(K, D, std::move(kvm), std::move(kem)), inclusion(D, X)};
}

std::pair<Morphism, Morphism> epi_mono_factorize(const Morphism& f) {
  Graph image;
  std::set<Id> vs, es;
  for (const auto& [k, x] : f.vmap()) vs.insert(x);
  for (const auto& [k, x] : f.emap()) es.insert(x);
  for (Id v : f.cod().vertices())
    if (vs.count(v)) image.add_vertex(v);
  for (const auto& [e, ends] : f.cod().edges())
    if (es.count(e)) image.add_edge(e, ends.src, ends.tgt);

  Morphism e(f.dom(), image, f.vmap(), f.emap());
  return {std::move(e), inclusion(image, f.cod())};
}

Span compose_spans(const Span& s2, const Span& s1) {
  if (!(s1.left.cod() == s2.right.cod()))
    throw Error("compose_spans: spans do not share their middle object");
  PullbackResult pb = pullback(make_cospan(s2.right, s1.left));
  return make_span(compose(s2.left, pb.left), compose(s1.right, pb.right));
}

bool is_pushout_square(const Span& s, const Morphism& f, const Morphism& g) {
  if (!(f.dom() == s.left.cod()) || !(g.dom() == s.right.cod())) return false;
  if (!(f.cod() == g.cod())) return false;
  if (!(compose(f, s.left) == compose(g, s.right))) return false;
  PushoutResult po = pushout(s);
  auto u = pushout_mediate(s, po, f, g);
  return u && u->is_iso();
}

bool is_pullback_square(const Cospan& c, const Morphism& p, const Morphism& q) {
  if (!(p.cod() == c.left.dom()) || !(q.cod() == c.right.dom())) return false;
  if (!(p.dom() == q.dom())) return false;
  if (!(compose(c.left, p) == compose(c.right, q))) return false;
  PullbackResult pb = pullback(c);
  auto u = pullback_mediate(c, pb, p, q);
  return u && u->is_iso();
}

bool is_pushout_complement_square(const Morphism& a, const Morphism& m, const Morphism& b,
                                  const Morphism& d) {
  // Square K→I→X over K→D→X; it is a POC square iff it is a pushout square
  // of the span (I ← K → D).
  if (!(compose(m, a) == compose(d, b))) return false;
  return is_pushout_square(make_span(a, b), m, d);
}

bool is_fpc_square(const Morphism& a, const Morphism& m, const Morphism& b, const Morphism& d) {
  if (!(compose(m, a) == compose(d, b))) return false;
  ComplementResult canon = final_pullback_complement(a, m);
  auto phi = factor_through_mono(d, canon.include);
  if (!phi || !phi->is_iso()) return false;
  return compose(*phi, b) == canon.embed;
}

}  // namespace gre
