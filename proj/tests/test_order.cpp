#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "relkit/diagonal.hpp"
#include "relkit/domains.hpp"
#include "relkit/errors.hpp"
#include "relkit/generators.hpp"
#include "relkit/order_analysis.hpp"

using namespace relkit;

TEST_CASE("provisional orderings") {
  const Carrier n = th::chain(4);
  CHECK(is_provisional_preorder(Rel::identity(n)));
  CHECK(is_provisional_ordering(Rel::identity(n)));
  CHECK(is_linear_provisional_ordering(Rel::identity(th::chain(1))));
  const Rel le = th::at_most(n);
  CHECK(is_provisional_preorder(le));
  CHECK(is_provisional_ordering(le));
  CHECK(is_linear_provisional_ordering(le));
  const Rel p = th::coreflexive(n, {0, 2});
  const Rel sub = compose(p, le, p);
  CHECK(is_linear_provisional_ordering(sub));
  CHECK_FALSE(leq(Rel::identity(n), sub));
  CHECK_FALSE(is_provisional_preorder(th::less(n)));
  CHECK_THROWS_AS(is_provisional_preorder(Rel::top(n, th::chain(4, "M"))), TypeError);
}

TEST_CASE("block-ordered relations") {
  const Carrier n = th::chain(4);
  CHECK(is_block_ordered(th::less(n)));
  CHECK(is_block_ordered(th::at_most(n)));
  CHECK_FALSE(is_block_ordered(th::load("membership4.rel").get("in")));
  Generator gen(41);
  for (int i = 0; i < 200; ++i) CHECK(is_block_ordered(gen.preorder(gen.carrier("A", 0, 6))));
  for (std::size_t rows = 0; rows <= 3; ++rows)
    for (std::size_t cols = 0; cols <= 3; ++cols)
      for (const Rel& r : enumerate_relations(th::chain(rows, "A"), th::chain(cols, "B")))
        REQUIRE(is_block_ordered(r) == oracle::block_ordered(r));
}

TEST_CASE("block decomposition of the strict chain") {
  const Carrier n = th::chain(4);
  const Rel r = th::less(n);
  const auto d = block_decompose(r);
  REQUIRE(d.has_value());
  CHECK(d->carrier.size() == 3);
  CHECK(d->t == th::at_most(d->carrier));
  CHECK(d->linear);
  CHECK(compose(converse(d->f), d->t, d->g) == r);
  CHECK(decomposition_violations(*d, r).empty());

  const auto bot = block_decompose(Rel::bottom(n, n));
  REQUIRE(bot.has_value());
  CHECK(bot->carrier.empty());
  CHECK_FALSE(block_decompose(th::load("membership4.rel").get("in")).has_value());
}

TEST_CASE("decompositions are unique up to isomorphism") {
  Generator gen(42);
  std::size_t decomposed = 0;
  for (int i = 0; i < 500; ++i) {
    const Carrier a = gen.carrier("A", 0, 5), b = gen.carrier("B", 0, 5);
    const Rel r = gen.relation(a, b);
    const auto d1 = block_decompose(r);
    REQUIRE(d1.has_value() == is_block_ordered(r));
    if (!d1) continue;
    ++decomposed;
    const auto d2 = block_decompose(r, TieBreak::greatest);
    REQUIRE(d2.has_value());
    const Rel same = representation_iso(*d1, *d1);
    CHECK(same == meet(d1->t, converse(d1->t)));
    const Rel phi = representation_iso(*d1, *d2);
    CHECK(compose(phi, converse(phi)) == meet(d1->t, converse(d1->t)));
    CHECK(compose(converse(phi), phi) == meet(d2->t, converse(d2->t)));
    CHECK(compose(d1->t, phi) == compose(phi, d2->t));
  }
  CHECK(decomposed > 50);

  const auto d = block_decompose(th::less(th::chain(4)));
  const auto other = block_decompose(th::at_most(th::chain(4)));
  CHECK_THROWS_AS(representation_iso(*d, *other), PreconditionError);
}

TEST_CASE("block ordering of a provisional preorder") {
  const Carrier n = th::chain(4);
  const BlockOrderDecomposition id = preorder_block_order(Rel::identity(n));
  CHECK(id.t == Rel::identity(id.carrier));
  const BlockOrderDecomposition le = preorder_block_order(th::at_most(n));
  CHECK(le.carrier.size() == 4);
  CHECK(le.t == th::at_most(le.carrier));

  const Rel t = th::load("preorder.rel").get("T");
  const BlockOrderDecomposition d = preorder_block_order(t);
  CHECK(d.carrier.size() == 3);
  CHECK(d.carrier.labels() == std::vector<std::string>{"0", "2", "3"});
  CHECK(leq(meet(d.t, converse(d.t)), Rel::identity(d.carrier)));
  CHECK(compose(converse(d.f), d.t, d.g) == t);
  const auto via_diagonal = block_decompose(t);
  REQUIRE(via_diagonal.has_value());
  const Rel phi = representation_iso(d, *via_diagonal);
  CHECK(is_bijection(phi));
  CHECK_THROWS_AS(preorder_block_order(th::less(n)), PreconditionError);
}

TEST_CASE("staircase formulations") {
  const Carrier n = th::chain(4);
  CHECK(is_staircase(th::at_most(n)));
  CHECK(is_staircase(th::less(n)));
  CHECK_FALSE(is_staircase(Rel::identity(th::chain(2))));
  CHECK(staircase_forms(Rel::identity(th::chain(2))).holding() == 0);
  for (std::size_t rows = 0; rows <= 3; ++rows)
    for (std::size_t cols = 0; cols <= 3; ++cols)
      for (const Rel& r : enumerate_relations(th::chain(rows, "A"), th::chain(cols, "B"))) {
        const StaircaseForms f = staircase_forms(r);
        REQUIRE(f.agree());
        REQUIRE(f.under == oracle::staircase(r));
      }
  Generator gen(43);
  for (int i = 0; i < 200; ++i) {
    const Carrier c = gen.carrier("A", 0, 6);
    CHECK(is_staircase(gen.linear_preorder(c)));
    CHECK(is_staircase(gen.strict_linear_order(c)));
  }
}

TEST_CASE("dense relations and the diagonal") {
  const Carrier n = th::chain(3);
  const Rel e = th::pairs(n, n, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});
  CHECK(dense_diag_check(e).passed);
  CHECK_FALSE(dense_diag_check(e).skipped);
  CHECK(dense_diag_check(Rel::bottom(n, n)).passed);
  CHECK(dense_diag_check(th::less(th::chain(4))).skipped);

  Generator gen(44);
  for (int i = 0; i < 300; ++i) {
    const Rel r = gen.dense(gen.carrier("A", 0, 5));
    if (!is_transitive(r)) continue;
    CHECK(dense_diag_check(r).passed);
  }

  // Dense, with reflexive points, and still an empty diagonal: the
  // equivalence needs transitivity.
  const Rel counter = th::pairs(n, n, {{0, 0}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(leq(counter, compose(counter, counter)));
  CHECK(diagonal(counter).is_empty());
  CHECK_FALSE(meet(counter, Rel::identity(n)).is_empty());
  const LawReport rep = dense_diag_check(counter);
  CHECK_FALSE(rep.passed);
  CHECK(rep.counterexample.has_value());
}
