#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "relkit/domains.hpp"
#include "relkit/errors.hpp"
#include "relkit/generators.hpp"
#include "relkit/pointwise.hpp"
#include "relkit/residuals.hpp"
#include "relkit/text_format.hpp"

using namespace relkit;

namespace {

bool is_preorder(const Rel& r) { return leq(Rel::identity(r.target()), r) && is_transitive(r); }

bool is_equivalence(const Rel& r) { return is_preorder(r) && is_symmetric(r); }

}  // namespace

TEST_CASE("factors of strict-less on the 4-chain") {
  const Carrier n = th::chain(4);
  const Rel r = th::less(n);
  CHECK(under(r, r) == th::at_most(n));
  CHECK(over(r, r) == th::at_most(n));
  // Frozen from the quantifier oracle: b ≤ a+1, which covers every b when a is the top.
  const Rel expected = Rel::tabulate(n, n, [](std::size_t a, std::size_t b) { return b <= a + 1; });
  CHECK(converse(sandwich(r, r, r)) == expected);
  CHECK(sandwich(r, r, r) == over(oracle::under(r, r), r));
}

TEST_CASE("vacuous antecedents give top") {
  const Carrier a = th::chain(2, "A"), b = th::chain(3, "B"), c = th::chain(2, "C");
  Generator gen(1);
  const Rel s = gen.relation(a, c);
  CHECK(under(Rel::bottom(a, b), s) == Rel::top(b, c));
  CHECK(over(s, Rel::bottom(b, c)) == Rel::top(a, b));
  CHECK(sym_rdiv(Rel::bottom(a, a), Rel::bottom(a, a)) == Rel::top(a, a));
  CHECK(sym_ldiv(Rel::identity(a), Rel::identity(a)) == Rel::identity(a));
}

TEST_CASE("sandwich identities") {
  Generator gen(2);
  for (int i = 0; i < 100; ++i) {
    const Carrier a = gen.carrier("A", 0, 5), c = gen.carrier("C", 0, 5);
    const Rel s = gen.relation(a, c);
    CHECK(sandwich(Rel::identity(a), s, Rel::identity(c)) == s);
    const Rel p = gen.preorder(a);
    CHECK(sandwich(p, p, p) == p);
  }
}

TEST_CASE("factors agree with the quantifier oracle and the pointwise evaluator") {
  Generator gen(3);
  for (int i = 0; i < 400; ++i) {
    const Carrier a = gen.carrier("A", 0, 5), b = gen.carrier("B", 0, 5), c = gen.carrier("C", 0, 5),
                  d = gen.carrier("D", 0, 5);
    const Rel r = gen.relation(a, b), s = gen.relation(a, c), t = gen.relation(d, c);
    const Rel u = gen.relation(a, b);
    CHECK(under(r, s) == oracle::under(r, s));
    CHECK(over(s, t) == oracle::over(s, t));
    CHECK(under(r, s) == pointwise::under(r, s));
    CHECK(over(s, t) == pointwise::over(s, t));
    CHECK(sandwich(r, s, t) == oracle::over(oracle::under(r, s), t));
    CHECK(sandwich(r, s, t) == pointwise::sandwich(r, s, t));
    CHECK(sym_rdiv(r, u) == pointwise::sym_rdiv(r, u));
  }
}

TEST_CASE("self factors are preorders and symmetric division is an equivalence") {
  Generator gen(4);
  for (int i = 0; i < 300; ++i) {
    const Carrier a = gen.carrier("A", 0, 5), b = gen.carrier("B", 0, 5);
    const Rel r = gen.relation(a, b);
    CHECK(is_preorder(under(r, r)));
    CHECK(is_preorder(over(r, r)));
    CHECK(is_equivalence(sym_rdiv(r, r)));
    CHECK(is_equivalence(sym_ldiv(r, r)));
    CHECK(sym_ldiv(r, r) == sym_rdiv(converse(r), converse(r)));
  }
}

TEST_CASE("galois connection for under and over") {
  Generator gen(5);
  for (int i = 0; i < 300; ++i) {
    const Carrier a = gen.carrier("A", 0, 4), b = gen.carrier("B", 0, 4), c = gen.carrier("C", 0, 4);
    const Rel r = gen.relation(a, b), s = gen.relation(a, c), x = gen.relation(b, c);
    CHECK(leq(x, under(r, s)) == leq(compose(r, x), s));
    const Rel t = gen.relation(b, c), y = gen.relation(a, b);
    CHECK(leq(y, over(s, t)) == leq(compose(y, t), s));
  }
}

TEST_CASE("symmetric division of membership is set equality") {
  const Document doc = th::load("membership4.rel");
  const Rel& in = doc.get("in");
  const Rel eq = sym_rdiv(in, in);
  // Every member of the family is distinct, so set equality is the identity.
  CHECK(eq == Rel::identity(in.source()));
}

TEST_CASE("factor type errors") {
  const Carrier a = th::chain(2, "A"), b = th::chain(2, "B");
  CHECK_THROWS_AS(under(Rel::top(a, b), Rel::top(b, b)), TypeError);
  CHECK_THROWS_AS(over(Rel::top(a, b), Rel::top(a, a)), TypeError);
  CHECK_THROWS_AS(sym_ldiv(Rel::top(a, b), Rel::top(a, a)), TypeError);
}
