#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "relkit/diagonal.hpp"
#include "relkit/domains.hpp"
#include "relkit/generators.hpp"
#include "relkit/residuals.hpp"

using namespace relkit;

TEST_CASE("diagonal examples") {
  const Carrier n = th::chain(4);
  CHECK(diagonal(Rel::bottom(n, n)).is_empty());
  CHECK(diagonal(th::less(n)) == th::pairs(n, n, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(diagonal(th::at_most(n)) == Rel::identity(n));

  Generator gen(21);
  for (int i = 0; i < 200; ++i) {
    const Carrier c = gen.carrier("A", 0, 6);
    const Rel t = gen.provisional_preorder(c);
    CHECK(diagonal(t) == meet(t, converse(t)));
    const Rel g = rtc(gen.digraph(c));
    CHECK(diagonal(g) == meet(g, converse(g)));
  }
}

TEST_CASE("diagonal matches the quantifier definition") {
  for (std::size_t rows = 0; rows <= 3; ++rows)
    for (std::size_t cols = 0; cols <= 3; ++cols) {
      const Carrier a = th::chain(rows, "A"), b = th::chain(cols, "B");
      for (const Rel& r : enumerate_relations(a, b)) REQUIRE(diagonal(r) == oracle::diagonal(r));
    }
  Generator gen(22);
  for (int i = 0; i < 2000; ++i) {
    const Carrier a = gen.carrier("A", 0, 6), b = gen.carrier("B", 0, 6);
    const Rel r = gen.relation(a, b);
    REQUIRE(diagonal(r) == oracle::diagonal(r));
  }
}

TEST_CASE("diagonal invariants") {
  Generator gen(23);
  for (int i = 0; i < 1000; ++i) {
    const Carrier a = gen.carrier("A", 0, 6), b = gen.carrier("B", 0, 6);
    const Rel r = gen.relation(a, b);
    const Rel d = diagonal(r);
    CHECK(difunctional_battery(d).all());
    CHECK(diagonal(converse(r)) == converse(d));
    CHECK(leq(d, r));
    CHECK(per_ldom(d) == compose(ldom(d), per_ldom(r)));
    CHECK(per_ldom(d) == compose(per_ldom(r), ldom(d)));
    CHECK(per_rdom(d) == compose(per_rdom(r), rdom(d)));
    CHECK((per_ldom(d) == per_ldom(r)) == (ldom(d) == ldom(r)));
    CHECK((per_rdom(d) == per_rdom(r)) == (rdom(d) == rdom(r)));
  }
}

TEST_CASE("antisymmetric self-factor makes the diagonal injective") {
  Generator gen(24);
  std::size_t premise = 0;
  for (int i = 0; i < 500; ++i) {
    const Carrier x = gen.carrier("X", 1, 5);
    const Rel in = gen.membership(x, gen.uniform(0, 6));
    const Rel u = under(in, in);
    if (!leq(meet(u, converse(u)), Rel::identity(u.target()))) continue;
    ++premise;
    CHECK(is_injective(diagonal(in)));
  }
  CHECK(premise > 50);
}
