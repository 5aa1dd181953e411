#include "relkit/order_analysis.hpp"

#include "relkit/diagonal.hpp"
#include "relkit/domains.hpp"
#include "relkit/errors.hpp"
#include "relkit/residuals.hpp"
#include "relkit/text_format.hpp"

namespace relkit {

bool is_provisional_preorder(const Rel& t) {
  require_homogeneous(t, "is_provisional_preorder");
  return leq(ldom(t), t) && leq(rdom(t), t) && leq(compose(t, t), t);
}

bool is_provisional_ordering(const Rel& t) {
  return is_provisional_preorder(t) && leq(meet(t, converse(t)), Rel::identity(t.target()));
}

bool is_linear_provisional_ordering(const Rel& t) {
  if (!is_provisional_ordering(t)) return false;
  const Rel tc = converse(t);
  const Rel sym = meet(t, tc);
  return join(t, tc) == compose(sym, Rel::top(t.target(), t.target()), sym);
}

bool is_block_ordered(const Rel& r) {
  const Rel d = diagonal(r);
  return ldom(r) == ldom(d) && rdom(r) == rdom(d);
}

std::vector<std::string> decomposition_violations(const BlockOrderDecomposition& d, const Rel& r) {
  std::vector<std::string> bad;
  if (!(d.f.target() == d.carrier) || !(d.g.target() == d.carrier) || !(d.t.target() == d.carrier) ||
      !(d.t.source() == d.carrier) || !(d.f.source() == r.target()) || !(d.g.source() == r.source())) {
    bad.emplace_back("types");
    return bad;
  }
  auto check = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  const Rel ff = compose(d.f, converse(d.f));
  check(r == compose(converse(d.f), d.t, d.g), "R = f˘∘T∘g");
  check(ff == ldom(d.f), "f∘f˘ = f<");
  check(ff == meet(d.t, converse(d.t)), "f∘f˘ = T∩T˘");
  check(ff == ldom(d.g), "f∘f˘ = g<");
  check(ff == compose(d.g, converse(d.g)), "f∘f˘ = g∘g˘");
  check(is_provisional_ordering(d.t), "T provisional ordering");
  check(d.linear == is_linear_provisional_ordering(d.t), "linearity flag");
  return bad;
}

std::optional<BlockOrderDecomposition> block_decompose(const Rel& r, TieBreak tie) {
  if (!is_block_ordered(r)) return std::nullopt;
  DifunctionSplit ds = difunction_split(diagonal(r), tie);
  Rel t = compose(ds.g, sandwich(r, r, r), converse(ds.f));
  BlockOrderDecomposition d{std::move(ds.f), std::move(t), std::move(ds.g), std::move(ds.carrier), false};
  d.linear = is_linear_provisional_ordering(d.t);
  auto bad = decomposition_violations(d, r);
  if (!bad.empty()) throw LawViolation("block_decompose: invariant fails: " + bad.front());
  return d;
}

Rel representation_iso(const BlockOrderDecomposition& d1, const BlockOrderDecomposition& d2) {
  if (!(d1.f.source() == d2.f.source()) || !(d1.g.source() == d2.g.source()) ||
      !(compose(converse(d1.f), d1.t, d1.g) == compose(converse(d2.f), d2.t, d2.g)))
    throw PreconditionError(
        "representation_iso: f1˘∘T1∘g1 and f2˘∘T2∘g2 are not the same relation");
  Rel phi = compose(d1.f, converse(d2.f));
  auto fail = [](const char* what) {
    throw LawViolation(std::string("representation_iso: ") + what + " fails");
  };
  if (!(phi == compose(d1.g, converse(d2.g)))) fail("f1∘f2˘ = g1∘g2˘");
  if (!(compose(phi, converse(phi)) == meet(d1.t, converse(d1.t)))) fail("φ∘φ˘ = T1∩T1˘");
  if (!(compose(converse(phi), phi) == meet(d2.t, converse(d2.t)))) fail("φ˘∘φ = T2∩T2˘");
  if (!(compose(d1.t, phi) == compose(phi, d2.t))) fail("T1∘φ = φ∘T2");
  if (!(rdom(d1.f) == rdom(d2.f)) || !(rdom(d1.g) == rdom(d2.g))) fail("f1> = f2> and g1> = g2>");
  if (!(compose(converse(d1.f), d1.g) == compose(converse(d2.f), d2.g))) fail("f1˘∘g1 = f2˘∘g2");
  if (!(compose(converse(d1.f), converse(d1.t), d1.g) == compose(converse(d2.f), converse(d2.t), d2.g)))
    fail("f1˘∘T1˘∘g1 = f2˘∘T2˘∘g2");
  return phi;
}

StaircaseForms staircase_forms(const Rel& r) {
  StaircaseForms s;
  const Rel u = under(r, r);
  s.under = join(u, converse(u)) == Rel::top(r.source(), r.source());
  const Rel o = over(r, r);
  s.over = join(o, converse(o)) == Rel::top(r.target(), r.target());
  s.both = join(r, converse(sandwich(r, r, r))) == Rel::top(r.target(), r.source());
  s.neg = leq(compose(r, negate(converse(r)), r), r);
  return s;
}

bool is_staircase(const Rel& r) {
  const StaircaseForms s = staircase_forms(r);
  if (!s.agree()) throw LawViolation("is_staircase: the four formulations disagree");
  return s.under;
}

LawReport dense_diag_check(const Rel& r) {
  require_homogeneous(r, "dense_diag_check");
  LawReport rep;
  rep.law_id = "diagonal.dense-empty";
  rep.instance = write_relation("R", r);
  if (!leq(r, compose(r, r))) {
    rep.skipped = true;
    rep.note = "premise not satisfied";
    return rep;
  }
  const bool diag_empty = diagonal(r).is_empty();
  const bool irreflexive = meet(Rel::identity(r.target()), r).is_empty();
  rep.passed = diag_empty == irreflexive;
  if (!rep.passed) rep.counterexample = rep.instance;
  return rep;
}

BlockOrderDecomposition preorder_block_order(const Rel& t, TieBreak tie) {
  if (!is_provisional_preorder(t))
    throw PreconditionError("preorder_block_order: relation is not a provisional preorder");
  const Rel per = per_ldom(t);
  const Rel j = per_index(per, tie);
  if (!is_index(compose(j, t, j), t)) throw LawViolation("preorder_block_order: J∘T∘J is not an index of T");
  Splitting s = split(per, tie);
  Rel core = compose(s.f, t, converse(s.f));
  BlockOrderDecomposition d{s.f, std::move(core), s.f, s.carrier, false};
  d.linear = is_linear_provisional_ordering(d.t);
  auto bad = decomposition_violations(d, t);
  if (!bad.empty()) throw LawViolation("preorder_block_order: invariant fails: " + bad.front());
  return d;
}

}  // namespace relkit
