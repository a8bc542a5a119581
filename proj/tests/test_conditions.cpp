#include "doctest.h"
#include "gre/conditions.hpp"
#include "gre/match.hpp"
#include "gre/rules.hpp"
#include "support.hpp"

using namespace gre;

namespace {

Graph loop_vertex() { return graph_of({0}, {{0, {0, 0}}}); }

}  // namespace

TEST_CASE("satisfaction basics") {
  Graph v = discrete_graph({0});
  Graph x = discrete_graph({0, 1});
  Morphism m(v, x, {{0, 0}}, {});

  SUBCASE("truth is always satisfied") { CHECK(satisfies(m, Condition::truth(v))); }

  SUBCASE("no-loop NAC") {
    Condition no_loop = Condition::negation(Condition::exists(inclusion(v, loop_vertex())));
    CHECK(satisfies(m, no_loop));
    Graph with_loop = graph_of({0, 1}, {{0, {0, 0}}});
    Morphism into_loop(v, with_loop, {{0, 0}}, {});
    CHECK(!satisfies(into_loop, no_loop));
  }

  SUBCASE("negation is complementary") {
    test::Rng rng(test::seed_from_env());
    for (int i = 0; i < 100; ++i) {
      Graph root = test::nonempty_random_graph(rng, 2, 1);
      Condition c = test::random_condition(rng, root, 2);
      Graph host = test::random_extension(rng, root, 2, 2);
      Morphism m2 = inclusion(root, host);
      CHECK(satisfies(m2, c) != satisfies(m2, Condition::negation(c)));
    }
  }

  SUBCASE("root mismatch faults") {
    CHECK_THROWS_AS(satisfies(m, Condition::truth(x)), Error);
  }
}

TEST_CASE("shift semantics") {
  SUBCASE("shift of truth is truth") {
    Graph v = discrete_graph({0});
    Graph w = discrete_graph({0, 1});
    CHECK(shift(inclusion(v, w), Condition::truth(v)).is_true());
  }

  SUBCASE("satisfaction transfer: q ⊨ shift(m, c) iff q∘m ⊨ c") {
    test::Rng rng(test::seed_from_env());
    int checked = 0;
    for (int i = 0; i < 25; ++i) {
      Graph root = test::nonempty_random_graph(rng, 2, 1);
      Condition c = test::random_condition(rng, root, 2);
      Graph mid = test::random_extension(rng, root, 2, 1);
      Morphism m = inclusion(root, mid);
      Condition shifted = shift(m, c);
      Graph host = test::random_extension(rng, mid, 1, 1);
      for (const Morphism& q : enumerate_monos(mid, host)) {
        CHECK(satisfies(q, shifted) == satisfies(compose(q, m), c));
        ++checked;
      }
    }
    CHECK(checked > 50);
  }

  SUBCASE("shift along an iso is a unit up to bounded equivalence") {
    test::Rng rng(test::seed_from_env() + 1);
    for (int i = 0; i < 8; ++i) {
      Graph root = test::nonempty_random_graph(rng, 2, 1);
      Condition c = test::random_condition(rng, root, 1);
      Morphism id = Morphism::identity(root);
      SizeBound bound{static_cast<int>(root.vertex_count()) + 2,
                      static_cast<int>(root.edge_count()) + 2, 2};
      CHECK(equivalent_bounded(shift(id, c), c, bound));
    }
  }

  SUBCASE("compositionality of shift") {
    test::Rng rng(test::seed_from_env() + 2);
    for (int i = 0; i < 6; ++i) {
      Graph root = test::nonempty_random_graph(rng, 2, 1);
      Condition c = test::random_condition(rng, root, 1);
      Graph mid = test::random_extension(rng, root, 1, 1);
      Graph top = test::random_extension(rng, mid, 1, 0);
      Morphism f = inclusion(root, mid);
      Morphism g = inclusion(mid, top);
      SizeBound bound{static_cast<int>(top.vertex_count()) + 1,
                      static_cast<int>(top.edge_count()) + 1, 2};
      CHECK(equivalent_bounded(shift(g, shift(f, c)), shift(compose(g, f), c), bound));
    }
  }
}

TEST_CASE("trans semantics") {
  SUBCASE("trans of truth is truth") {
    test::Rng rng(test::seed_from_env());
    Rule r = test::random_rule(rng, 3, 2);
    CHECK(trans(r, Condition::truth(r.output)).is_true());
  }

  SUBCASE("units for trans") {
    test::Rng rng(test::seed_from_env() + 3);
    for (int i = 0; i < 6; ++i) {
      Graph g = test::nonempty_random_graph(rng, 2, 1);
      Rule id_rule = Rule::identity_rule(g);
      Condition c = test::random_condition(rng, g, 1);
      SizeBound bound{static_cast<int>(g.vertex_count()) + 2,
                      static_cast<int>(g.edge_count()) + 2, 2};
      CHECK(equivalent_bounded(trans(id_rule, c), c, bound));
    }
  }

  SUBCASE("satisfiability for trans: m ⊨ trans(r, c_O) iff m* ⊨ c_O") {
    test::Rng rng(test::seed_from_env() + 4);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
      Rule r = test::random_rule(rng, 2, 1);
      Condition c_o = test::random_condition(rng, r.output, 1);
      Condition transported = trans(r, c_o);
      Graph x = test::random_extension(rng, r.input, 1, 1);
      for (RewriteType t : {RewriteType::Dpo, RewriteType::Sqpo}) {
        RuleWithConditions rwc{r};
        for (const Morphism& m : find_matches(rwc, x, t)) {
          DirectDerivation dd = apply(rwc, x, m, t);
          CHECK(satisfies(m, transported) == satisfies(dd.comatch, c_o));
          ++checked;
        }
      }
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("bounded equivalence and satisfiability") {
  Graph v = discrete_graph({0});
  SizeBound bound{3, 3, 2};

  SUBCASE("reflexive") {
    Condition c = Condition::exists(inclusion(v, loop_vertex()));
    CHECK(equivalent_bounded(c, c, bound));
  }
  SUBCASE("truth differs from its negation") {
    CHECK(!equivalent_bounded(Condition::truth(v), Condition::negation(Condition::truth(v)), bound));
  }
  SUBCASE("empty conjunction is truth") {
    CHECK(equivalent_bounded(Condition::conjunction(v, {}), Condition::truth(v), bound));
    CHECK(simplify(Condition::conjunction(v, {})).is_true());
  }
  SUBCASE("not-false verdicts") {
    CHECK(not_false_bounded(Condition::truth(v), bound).value);
    auto neg = not_false_bounded(Condition::negation(Condition::truth(v)), bound);
    CHECK(!neg.value);
    CHECK(neg.conclusive);
    Graph edge = graph_of({0, 1}, {{0, {0, 1}}});
    Condition wants_edge = Condition::exists(inclusion(v, edge));
    auto verdict = not_false_bounded(wants_edge, bound);
    CHECK(verdict.value);
  }
}

TEST_CASE("condition isomorphism check") {
  Graph v = discrete_graph({0});
  Graph w = discrete_graph({5});
  Morphism root_iso(v, w, {{0, 5}}, {});

  Graph ext_v = graph_of({0, 1}, {{0, {0, 1}}});
  Graph ext_w = graph_of({5, 6}, {{2, {5, 6}}});
  Condition c1 = Condition::exists(inclusion(v, ext_v));
  Condition c2 = Condition::exists(Morphism(w, ext_w, {{5, 5}}, {}));
  CHECK(condition_isomorphic(c1, c2, root_iso));
  Condition c3 = Condition::exists(Morphism(w, ext_w, {{5, 6}}, {}));
  CHECK(!condition_isomorphic(c1, c3, root_iso));
}
