#pragma once

#include <memory>
#include <vector>

#include "gre/enumerate.hpp"
#include "gre/morphism.hpp"

namespace gre {

struct Rule;

// A nested first-order application condition rooted at a graph. Immutable
// tree with shared nodes; cheap to copy.
//
//   true | ∃(a: X↪A, c_A) | ¬c | ∧[c...] | ∨[c...]
//
// The empty conjunction is truth, the empty disjunction falsity.
class Condition {
 public:
  enum class Kind { True, Exists, Not, And, Or };

  static Condition truth(Graph root);
  static Condition falsity(Graph root);
  static Condition exists(Morphism leg, Condition inner);
  static Condition exists(Morphism leg);
  static Condition negation(Condition inner);
  static Condition conjunction(Graph root, std::vector<Condition> children);
  static Condition disjunction(Graph root, std::vector<Condition> children);

  Kind kind() const;
  const Graph& root() const;
  const Morphism& leg() const;        // Exists only
  const Condition& inner() const;     // Exists / Not
  const std::vector<Condition>& children() const;  // And / Or

  bool is_true() const { return kind() == Kind::True; }
  // Syntactic falsity: the empty disjunction.
  bool is_false() const { return kind() == Kind::Or && children().empty(); }

  int depth() const;

  friend bool operator==(const Condition& a, const Condition& b);

 private:
  struct Node;
  explicit Condition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Inductive satisfaction of c by a mono m with dom(m) = c.root().
bool satisfies(const Morphism& m, const Condition& c);

// Shift of a condition along a mono a1: root → B1; result is rooted at B1.
// The Exists case ranges over iso classes of mono spans between the two
// codomains through which the original span factors, glued by pushout.
Condition shift(const Morphism& a1, const Condition& c);

// Transport of a condition over the output of a linear rule to its input.
// Exists legs that are not DPO†-admissible collapse to falsity.
Condition trans(const Rule& r, const Condition& c_output);

// And/Or flattening plus constant folding; no deeper rewriting.
Condition simplify(const Condition& c);

struct BoundedVerdict {
  bool value = false;
  // False verdicts reached by exhausting the bound are inconclusive; syntactic
  // results and found witnesses are conclusive.
  bool conclusive = true;
};

// True iff some mono from the root into a graph within the bound satisfies c.
BoundedVerdict not_false_bounded(const Condition& c, const SizeBound& bound);

// True iff satisfaction agrees on every mono from the shared root into every
// graph within the bound (up to iso). A negative answer is exact; a positive
// one holds up to the bound.
bool equivalent_bounded(const Condition& c1, const Condition& c2, const SizeBound& bound);

// Structural equality up to graph isomorphism, given an iso of roots.
// And/Or children are matched as multisets.
bool condition_isomorphic(const Condition& c1, const Condition& c2, const Morphism& root_iso);

}  // namespace gre
