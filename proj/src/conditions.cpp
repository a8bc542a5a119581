#include "gre/conditions.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include "gre/colimits.hpp"
#include "gre/match.hpp"
#include "gre/parallel.hpp"
#include "gre/rules.hpp"

namespace gre {

struct Condition::Node {
  Kind kind = Kind::True;
  Graph root;
  Morphism leg;                      // Exists
  std::vector<Condition> children;   // Not (1), And/Or (any), Exists (1 = inner)
};

Condition Condition::truth(Graph root) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::True;
  n->root = std::move(root);
  return Condition(std::move(n));
}

Condition Condition::falsity(Graph root) { return disjunction(std::move(root), {}); }

Condition Condition::exists(Morphism leg, Condition inner) {
  if (!leg.is_mono()) throw Error("condition: exists leg must be mono");
  if (!(inner.root() == leg.cod())) throw Error("condition: inner root must be the leg codomain");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->root = leg.dom();
  n->leg = std::move(leg);
  n->children.push_back(std::move(inner));
  return Condition(std::move(n));
}

Condition Condition::exists(Morphism leg) {
  Condition inner = truth(leg.cod());
  return exists(std::move(leg), std::move(inner));
}

Condition Condition::negation(Condition inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->root = inner.root();
  n->children.push_back(std::move(inner));
  return Condition(std::move(n));
}

Condition Condition::conjunction(Graph root, std::vector<Condition> children) {
  for (const Condition& c : children)
    if (!(c.root() == root)) throw Error("condition: conjunct root mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->root = std::move(root);
  n->children = std::move(children);
  return Condition(std::move(n));
}

Condition Condition::disjunction(Graph root, std::vector<Condition> children) {
  for (const Condition& c : children)
    if (!(c.root() == root)) throw Error("condition: disjunct root mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->root = std::move(root);
  n->children = std::move(children);
  return Condition(std::move(n));
}

Condition::Kind Condition::kind() const { return node_->kind; }
const Graph& Condition::root() const { return node_->root; }

const Morphism& Condition::leg() const {
  if (node_->kind != Kind::Exists) throw Error("condition: leg() on non-exists node");
  return node_->leg;
}

const Condition& Condition::inner() const {
  if (node_->kind != Kind::Exists && node_->kind != Kind::Not)
    throw Error("condition: inner() on node without a single child");
  return node_->children.front();
}

const std::vector<Condition>& Condition::children() const { return node_->children; }

int Condition::depth() const {
  switch (kind()) {
    case Kind::True:
      return 0;
    case Kind::Exists:
      return 1 + inner().depth();
    case Kind::Not:
      return inner().depth();
    case Kind::And:
    case Kind::Or: {
      int d = 0;
      for (const Condition& c : children()) d = std::max(d, c.depth());
      return d;
    }
  }
  return 0;
}

bool operator==(const Condition& a, const Condition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || !(a.root() == b.root())) return false;
  switch (a.kind()) {
    case Condition::Kind::True:
      return true;
    case Condition::Kind::Exists:
      return a.leg() == b.leg() && a.inner() == b.inner();
    default:
      return a.children() == b.children();
  }
}

bool satisfies(const Morphism& m, const Condition& c) {
  if (!(m.dom() == c.root())) throw Error("satisfies: morphism domain differs from condition root");
  if (!m.is_mono()) throw Error("satisfies: morphism must be mono");
  switch (c.kind()) {
    case Condition::Kind::True:
      return true;
    case Condition::Kind::Exists: {
      const Morphism& a = c.leg();
      for (const Morphism& q : enumerate_monos_factoring(a.cod(), m.cod(), a, m))
        if (satisfies(q, c.inner())) return true;
      return false;
    }
    case Condition::Kind::Not:
      return !satisfies(m, c.inner());
    case Condition::Kind::And:
      for (const Condition& child : c.children())
        if (!satisfies(m, child)) return false;
      return true;
    case Condition::Kind::Or:
      for (const Condition& child : c.children())
        if (satisfies(m, child)) return true;
      return false;
  }
  return false;
}

Condition shift(const Morphism& a1, const Condition& c) {
  if (!(c.root() == a1.dom())) throw Error("shift: condition root differs from morphism domain");
  if (!a1.is_mono()) throw Error("shift: only monic shifts are supported");
  const Graph& b1 = a1.cod();
  switch (c.kind()) {
    case Condition::Kind::True:
      return Condition::truth(b1);
    case Condition::Kind::Exists: {
      const Morphism& a2 = c.leg();
      // Image of a1 inside B1, as a literal subgraph.
      auto [e_part, m_part] = epi_mono_factorize(a1);
      const Graph& image = e_part.cod();

      std::vector<Condition> contributions;
      for (const Graph& s : enumerate_subgraphs_containing(b1, image)) {
        Morphism u(a1.dom(), s, a1.vmap(), a1.emap());
        for (const Morphism& h : enumerate_monos_factoring(s, a2.cod(), u, a2)) {
          Span overlap = make_span(inclusion(s, b1), h);
          PushoutResult po = pushout(overlap);
          contributions.push_back(Condition::exists(po.left, shift(po.right, c.inner())));
        }
      }
      return Condition::disjunction(b1, std::move(contributions));
    }
    case Condition::Kind::Not:
      return Condition::negation(shift(a1, c.inner()));
    case Condition::Kind::And: {
      std::vector<Condition> shifted;
      for (const Condition& child : c.children()) shifted.push_back(shift(a1, child));
      return Condition::conjunction(b1, std::move(shifted));
    }
    case Condition::Kind::Or: {
      std::vector<Condition> shifted;
      for (const Condition& child : c.children()) shifted.push_back(shift(a1, child));
      return Condition::disjunction(b1, std::move(shifted));
    }
  }
  throw Error("shift: unreachable");
}

Condition trans(const Rule& r, const Condition& c_output) {
  if (!(c_output.root() == r.output)) throw Error("trans: condition root differs from rule output");
  switch (c_output.kind()) {
    case Condition::Kind::True:
      return Condition::truth(r.input);
    case Condition::Kind::Exists: {
      const Morphism& b = c_output.leg();
      auto poc = pushout_complement(r.to_output, b);
      if (!poc) return Condition::falsity(r.input);
      PushoutResult po = pushout(make_span(poc->embed, r.to_input));
      // Derived rule B ⇐ B' for the recursive transport.
      Rule derived{b.cod(), poc->context, po.object, poc->include, po.left};
      return Condition::exists(po.right, trans(derived, c_output.inner()));
    }
    case Condition::Kind::Not:
      return Condition::negation(trans(r, c_output.inner()));
    case Condition::Kind::And: {
      std::vector<Condition> out;
      for (const Condition& child : c_output.children()) out.push_back(trans(r, child));
      return Condition::conjunction(r.input, std::move(out));
    }
    case Condition::Kind::Or: {
      std::vector<Condition> out;
      for (const Condition& child : c_output.children()) out.push_back(trans(r, child));
      return Condition::disjunction(r.input, std::move(out));
    }
  }
  throw Error("trans: unreachable");
}

Condition simplify(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::True:
      return c;
    case Condition::Kind::Exists: {
      Condition inner = simplify(c.inner());
      if (inner.is_false()) return Condition::falsity(c.root());
      return Condition::exists(c.leg(), std::move(inner));
    }
    case Condition::Kind::Not: {
      Condition inner = simplify(c.inner());
      if (inner.is_true()) return Condition::falsity(c.root());
      if (inner.is_false()) return Condition::truth(c.root());
      return Condition::negation(std::move(inner));
    }
    case Condition::Kind::And: {
      std::vector<Condition> kids;
      for (const Condition& child : c.children()) {
        Condition s = simplify(child);
        if (s.is_true()) continue;
        if (s.is_false()) return Condition::falsity(c.root());
        if (s.kind() == Condition::Kind::And) {
          for (const Condition& grand : s.children()) kids.push_back(grand);
        } else {
          kids.push_back(std::move(s));
        }
      }
      if (kids.empty()) return Condition::truth(c.root());
      if (kids.size() == 1) return kids.front();
      return Condition::conjunction(c.root(), std::move(kids));
    }
    case Condition::Kind::Or: {
      std::vector<Condition> kids;
      for (const Condition& child : c.children()) {
        Condition s = simplify(child);
        if (s.is_false()) continue;
        if (s.is_true()) return Condition::truth(c.root());
        if (s.kind() == Condition::Kind::Or) {
          for (const Condition& grand : s.children()) kids.push_back(grand);
        } else {
          kids.push_back(std::move(s));
        }
      }
      if (kids.empty()) return Condition::falsity(c.root());
      if (kids.size() == 1) return kids.front();
      return Condition::disjunction(c.root(), std::move(kids));
    }
  }
  return c;
}

BoundedVerdict not_false_bounded(const Condition& c, const SizeBound& bound) {
  Condition s = simplify(c);
  if (s.is_true()) return {true, true};
  if (s.is_false()) return {false, true};

  const std::vector<Graph>& candidates = enumerate_graphs_upto_iso(bound);
  std::atomic<bool> found{false};
  par::parallel_for(candidates.size(), [&](std::size_t i) {
    if (found.load(std::memory_order_relaxed)) return;
    for (const Morphism& m : enumerate_monos(s.root(), candidates[i])) {
      if (satisfies(m, s)) {
        found.store(true, std::memory_order_relaxed);
        return;
      }
    }
  });
  if (found.load()) return {true, true};
  return {false, false};
}

bool equivalent_bounded(const Condition& c1, const Condition& c2, const SizeBound& bound) {
  if (!(c1.root() == c2.root())) throw Error("equivalent_bounded: roots differ");
  const std::vector<Graph>& candidates = enumerate_graphs_upto_iso(bound);
  std::atomic<bool> mismatch{false};
  par::parallel_for(candidates.size(), [&](std::size_t i) {
    if (mismatch.load(std::memory_order_relaxed)) return;
    for (const Morphism& m : enumerate_monos(c1.root(), candidates[i])) {
      if (satisfies(m, c1) != satisfies(m, c2)) {
        mismatch.store(true, std::memory_order_relaxed);
        return;
      }
    }
  });
  return !mismatch.load();
}

bool condition_isomorphic(const Condition& c1, const Condition& c2, const Morphism& root_iso) {
  if (!(root_iso.dom() == c1.root()) || !(root_iso.cod() == c2.root()))
    throw Error("condition_isomorphic: root iso does not connect the roots");
  if (c1.kind() != c2.kind()) return false;
  switch (c1.kind()) {
    case Condition::Kind::True:
      return true;
    case Condition::Kind::Exists: {
      Morphism target = compose(c2.leg(), root_iso);
      for (const Morphism& psi :
           enumerate_monos_factoring(c1.leg().cod(), c2.leg().cod(), c1.leg(), target)) {
        if (!psi.is_iso()) continue;
        if (condition_isomorphic(c1.inner(), c2.inner(), psi)) return true;
      }
      return false;
    }
    case Condition::Kind::Not:
      return condition_isomorphic(c1.inner(), c2.inner(), root_iso);
    case Condition::Kind::And:
    case Condition::Kind::Or: {
      const auto& xs = c1.children();
      const auto& ys = c2.children();
      if (xs.size() != ys.size()) return false;
      std::vector<bool> used(ys.size(), false);
      std::function<bool(std::size_t)> match = [&](std::size_t i) {
        if (i == xs.size()) return true;
        for (std::size_t j = 0; j < ys.size(); ++j) {
          if (used[j]) continue;
          if (!condition_isomorphic(xs[i], ys[j], root_iso)) continue;
          used[j] = true;
          if (match(i + 1)) return true;
          used[j] = false;
        }
        return false;
      };
      return match(0);
    }
  }
  return false;
}

}  // namespace gre
