#pragma once

#include <optional>
#include <utility>

#include "gre/morphism.hpp"

namespace gre {

// Pushout of a span (B ← K → C). Ids are allocated deterministically: classes
// containing a B-element keep the least such id, C-only classes get fresh ids
// past max(B) in order of their least C-id.
struct PushoutResult {
  Graph object;
  Morphism left;   // B → P
  Morphism right;  // C → P
};
PushoutResult pushout(const Span& s);

// The unique mediating morphism P → Q for a commuting cocone (f: B→Q, g: C→Q);
// nullopt when the cocone does not commute over the span.
std::optional<Morphism> pushout_mediate(const Span& s, const PushoutResult& po, const Morphism& f,
                                        const Morphism& g);

// Pullback of a cospan (B → D ← C). Apex elements are the matched pairs,
// numbered in lexicographic (B-id, C-id) order.
struct PullbackResult {
  Graph apex;
  Morphism left;   // P → B
  Morphism right;  // P → C
};
PullbackResult pullback(const Cospan& c);

// The unique mediating morphism Z → P for a commuting cone (p: Z→B, q: Z→C).
std::optional<Morphism> pullback_mediate(const Cospan& c, const PullbackResult& pb,
                                         const Morphism& p, const Morphism& q);

// Complement square results share a shape: K → D → X completing a: K→I,
// m: I→X so that the square commutes. The context D is a literal subgraph of
// X (ids inherited).
struct ComplementResult {
  Graph context;      // D
  Morphism embed;     // K → D
  Morphism include;   // D → X
};

// Pushout complement for monos a: K→I, m: I→X. Exists iff no deleted vertex
// leaves a dangling edge behind; absent-value otherwise.
std::optional<ComplementResult> pushout_complement(const Morphism& a, const Morphism& m);

// Final pullback complement for monos; always exists. Deletes m(I∖a(K)) plus
// every edge incident to a deleted vertex.
ComplementResult final_pullback_complement(const Morphism& a, const Morphism& m);

// f = m ∘ e with e epi onto the image subgraph and m its inclusion.
std::pair<Morphism, Morphism> epi_mono_factorize(const Morphism& f);

// Pullback composition of spans: s2 = (Z ← B → Y) after s1 = (Y ← A → X),
// sharing the middle object Y; yields (Z ← P → X).
Span compose_spans(const Span& s2, const Span& s1);

// Square checkers (by comparison against the canonical constructions).
bool is_pushout_square(const Span& s, const Morphism& f, const Morphism& g);
bool is_pullback_square(const Cospan& c, const Morphism& p, const Morphism& q);
bool is_pushout_complement_square(const Morphism& a, const Morphism& m, const Morphism& b,
                                  const Morphism& d);
bool is_fpc_square(const Morphism& a, const Morphism& m, const Morphism& b, const Morphism& d);

}  // namespace gre
