#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "relkit/axioms.hpp"
#include "relkit/errors.hpp"
#include "relkit/generators.hpp"
#include "relkit/kernels.hpp"

using namespace relkit;

TEST_CASE("carrier equality is by name and size") {
  const Carrier a("A", {"x", "y"});
  const Carrier b("A", {"p", "q"});
  CHECK(a == b);
  CHECK_FALSE(a.identical(b));
  CHECK_FALSE(a == Carrier("B", {"x", "y"}));
  CHECK(a.find("y") == 1u);
  CHECK_FALSE(a.find("z").has_value());
  CHECK(Carrier::numbered("E", 0).empty());
  CHECK_THROWS_AS(Carrier("A", {"x", "x"}), Error);
  CHECK_THROWS_AS(Carrier("A", {"has space"}), Error);
  CHECK_THROWS_AS(Carrier("A", {"#"}), Error);
}

TEST_CASE("make builds bottom, identity and top") {
  const Carrier a2("A", {"0", "1"});
  const Carrier b3("B", {"0", "1", "2"});
  CHECK(Rel::make(a2, a2, {}) == Rel::bottom(a2, a2));
  CHECK(Rel::make(a2, a2, {{"0", "0"}, {"1", "1"}}) == Rel::identity(a2));
  std::vector<std::pair<std::string, std::string>> all;
  for (const auto& x : a2.labels())
    for (const auto& y : b3.labels()) all.emplace_back(x, y);
  CHECK(Rel::make(a2, b3, all) == Rel::top(a2, b3));
  CHECK_THROWS_AS(Rel::make(a2, b3, {{"0", "7"}}), Error);
}

TEST_CASE("composition examples") {
  const Carrier n = th::chain(2);
  const Rel r = th::pairs(n, n, {{0, 1}});
  CHECK(compose(r, r).is_empty());
  Generator gen(11);
  for (int i = 0; i < 20; ++i) {
    const Carrier a = gen.carrier("A", 0, 5), b = gen.carrier("B", 0, 5);
    const Rel x = gen.relation(a, b);
    CHECK(compose(Rel::identity(a), x) == x);
    CHECK(compose(Rel::bottom(a, a), x).is_empty());
  }
  CHECK_THROWS_AS(compose(Rel::identity(th::chain(2, "A")), Rel::identity(th::chain(2, "B"))), TypeError);
}

TEST_CASE("converse and boolean operations") {
  const Carrier n = th::chain(3);
  const Rel r = th::pairs(n, n, {{0, 1}});
  CHECK(converse(r) == th::pairs(n, n, {{1, 0}}));
  CHECK(converse(Rel::identity(n)) == Rel::identity(n));
  CHECK(converse(converse(r)) == r);
  CHECK(meet(r, Rel::top(n, n)) == r);
  CHECK(join(r, negate(r)) == Rel::top(n, n));
  CHECK(leq(Rel::bottom(n, n), r));
  CHECK_THROWS_AS(meet(r, Rel::top(n, th::chain(3, "M"))), TypeError);
}

TEST_CASE("reflexive-transitive closure") {
  const Carrier n = th::chain(3);
  CHECK(rtc(Rel::bottom(n, n)) == Rel::identity(n));
  CHECK(rtc(Rel::identity(n)) == Rel::identity(n));
  const Rel r = th::pairs(n, n, {{0, 1}, {1, 2}});
  CHECK(rtc(r) == join(Rel::identity(n), th::pairs(n, n, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_THROWS_AS(rtc(Rel::bottom(n, th::chain(3, "M"))), TypeError);

  Generator gen(5);
  for (int i = 0; i < 50; ++i) {
    const Carrier c = gen.carrier("V", 0, 9);
    const Rel g = gen.digraph(c);
    CHECK(oracle::mat(rtc(g)) == oracle::rtc(oracle::mat(g)));
  }
}

TEST_CASE("axioms on 2-element carriers and random triples") {
  const Carrier a = th::chain(2, "A"), b = th::chain(2, "B"), c = th::chain(2, "C");
  for (std::uint64_t x = 0; x < 16; x += 3)
    for (std::uint64_t y = 0; y < 16; y += 5)
      for (std::uint64_t z = 0; z < 16; ++z) {
        for (const auto& rep : check_axioms(relation_from_code(a, b, x), relation_from_code(b, c, y),
                                            relation_from_code(a, c, z)))
          CHECK(rep.passed);
      }

  Generator gen(99);
  for (int i = 0; i < 1000; ++i) {
    const Carrier p = gen.carrier("A", 1, 4), q = gen.carrier("B", 1, 4), s = gen.carrier("C", 1, 4);
    for (const auto& rep : check_axioms(gen.relation(p, q), gen.relation(q, s), gen.relation(p, s)))
      REQUIRE(rep.passed);
  }
}

TEST_CASE("cone rule on the empty relation") {
  const Carrier a = th::chain(2, "A");
  const Rel bot = Rel::bottom(a, a);
  const Rel cone = compose(Rel::top(a, a), bot, Rel::top(a, a));
  CHECK(cone.is_empty());
  CHECK(cone_holds(bot));
  CHECK_THROWS_AS(cone_holds(Rel::bottom(th::chain(0, "E"), a)), PreconditionError);
  const auto reps = check_axioms(bot, Rel::bottom(a, th::chain(0, "E")), bot);
  CHECK(reps[0].skipped);
  CHECK(reps[3].skipped);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 63u, 64u, 65u, 300u}) {
    std::bernoulli_distribution coin(n > 100 ? 0.02 : 0.2);
    BitMatrix a(n, n + 7), b(n + 7, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n + 7; ++j) {
        if (coin(rng)) a.set(i, j);
        if (coin(rng)) b.set(j, i);
      }
    CHECK(kernels::compose(a, b) == kernels::reference::compose(a, b));
    CHECK(kernels::transpose(a) == kernels::reference::transpose(a));
    const BitMatrix sq = kernels::compose(a, b);
    CHECK(kernels::closure(sq) == kernels::reference::closure(sq));
  }
}

TEST_CASE("parallel threshold forces both code paths") {
  const auto saved = kernels::parallel_threshold();
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.1);
  BitMatrix a(40, 40);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j)
      if (coin(rng)) a.set(i, j);
  kernels::set_parallel_threshold(1);
  const BitMatrix par = kernels::closure(a);
  kernels::set_parallel_threshold(1u << 20);
  CHECK(kernels::closure(a) == par);
  kernels::set_parallel_threshold(saved);
}
