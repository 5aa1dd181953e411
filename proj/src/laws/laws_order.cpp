#include "laws/common.hpp"
#include "relkit/diagonal.hpp"
#include "relkit/order_analysis.hpp"
#include "relkit/pair_algebra.hpp"
#include "relkit/residuals.hpp"

namespace relkit::laws {

namespace {

bool block_premise(const Rel& f, const Rel& t, const Rel& g) {
  const Rel sym = meet(t, converse(t));
  return is_provisional_ordering(t) && compose(f, converse(f)) == ldom(f) && ldom(f) == sym &&
         ldom(g) == sym && compose(g, converse(g)) == ldom(g);
}

}  // namespace

void register_order_laws(std::vector<Law>& out) {
  const std::string m = "order-analysis";

  add(out, "block.representation-lemma", m,
      "R = f˘∘T∘g with f, g functional onto the domain of T: R< = f>, R> = g>, "
      "f˘∘T˘∘g = R<∘(R\\R/R)˘∘R>, f˘∘g = ΔR, domains and per domains of R and ΔR agree",
      {functional("f", "C", "A"), provisional_ordering("T", "C"), functional("g", "C", "B")}, [](Inst x) {
        const Rel &f = x[0], &t = x[1], &g = x[2];
        if (!block_premise(f, t, g)) return vacuous();
        const Rel fc = converse(f);
        const Rel r = compose(fc, t, g);
        const Rel d = diagonal(r);
        return Checks()
            .eq(ldom(r), rdom(f), "R< = f>")
            .eq(rdom(r), rdom(g), "R> = g>")
            .eq(compose(fc, converse(t), g), compose(ldom(r), converse(sandwich(r, r, r)), rdom(r)),
                "f˘∘T˘∘g = R<∘(R\\R/R)˘∘R>")
            .eq(compose(fc, g), d, "f˘∘g = ΔR")
            .eq(ldom(d), ldom(r), "R< = (ΔR)<")
            .eq(rdom(d), rdom(r), "R> = (ΔR)>")
            .eq(per_ldom(r), compose(d, converse(d)), "R<per = ΔR∘ΔR˘")
            .eq(per_ldom(r), compose(fc, f), "R<per = f˘∘f")
            .eq(per_rdom(r), compose(converse(d), d), "R>per = ΔR˘∘ΔR")
            .eq(per_rdom(r), compose(converse(g), g), "R>per = g˘∘g")
            .expect(is_block_ordered(r), "block-ordered")
            .outcome();
      })
      .sample = [](Generator& gen, std::span<const Carrier> cs) {
    auto s = gen.block_ordered(cs[1], cs[2], cs[0]);
    return std::vector<Rel>{s.f, s.t, s.g};
  };

  add(out, "block.domain-criterion", m,
      "R< = (ΔR)< ∧ R> = (ΔR)> exactly when a verified decomposition R = f˘∘T∘g exists",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const bool criterion = is_block_ordered(r);
        const auto d = block_decompose(r);
        if (criterion != d.has_value()) return fails(criterion ? "no decomposition found" : "decomposition claimed");
        if (d && !decomposition_violations(*d, r).empty()) return fails("decomposition invariants");
        return holds();
      })
      .sample = [](Generator& gen, std::span<const Carrier> cs) {
    if (gen.coin(0.5)) {
      const Carrier c = Carrier::numbered("C", gen.uniform(0, 6));
      return std::vector<Rel>{gen.block_ordered(cs[0], cs[1], c).r};
    }
    return std::vector<Rel>{gen.relation(cs[0], cs[1])};
  };

  add(out, "core.diagonal-domain", m, "R< = (ΔR)< ≡ C< = (ΔC)<, and dually on the right",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const Rel c = core_of(r).core;
        const Rel dr = diagonal(r), dc = diagonal(c);
        return Checks()
            .expect((ldom(r) == ldom(dr)) == (ldom(c) == ldom(dc)), "left")
            .expect((rdom(r) == rdom(dr)) == (rdom(c) == rdom(dc)), "right")
            .outcome();
      });

  add(out, "core.ordering", m, "for block-ordered R = f˘∘T∘g: f∘R∘g˘ = T", {any("R", "A", "B")}, [](Inst x) {
    const Rel& r = x[0];
    const auto d = block_decompose(r);
    if (!d) return vacuous();
    return Checks().eq(compose(d->f, r, converse(d->g)), d->t, "f∘R∘g˘ = T").outcome();
  });

  add(out, "staircase.equivalent-forms", m, "the four staircase formulations agree", {any("R", "A", "B")},
      [](Inst x) {
        const auto s = staircase_forms(x[0]);
        if (s.agree()) return holds();
        return fails("under=" + std::to_string(s.under) + " over=" + std::to_string(s.over) +
                     " both=" + std::to_string(s.both) + " neg=" + std::to_string(s.neg));
      });

  add(out, "staircase.linear-preorder", m, "a linear preorder is a staircase relation",
      {{"R", "A", "A", [](const Rel& r) { return is_preorder(r) && is_total(r); },
        [](Generator& g, const Carrier& c, const Carrier&) { return g.linear_preorder(c); }}},
      [](Inst x) { return is_staircase(x[0]) ? holds() : fails("not staircase"); });

  add(out, "staircase.strict-linear", m, "R∘R ⊆ R ∧ R ∪ I ∪ R˘ = ⊤ ⇒ R is a staircase relation",
      {{"R", "A", "A",
        [](const Rel& r) { return is_transitive(r) && is_total(join(r, id(r))); },
        [](Generator& g, const Carrier& c, const Carrier&) {
          return join(g.strict_linear_order(c), g.coreflexive(c));
        }}},
      [](Inst x) { return is_staircase(x[0]) ? holds() : fails("not staircase"); });

  add(out, "provisional.domains", m, "T< = T> for a provisional preorder T", {provisional_preorder("T", "A")},
      [](Inst x) { return Checks().eq(ldom(x[0]), rdom(x[0]), "T< = T>").outcome(); });

  add(out, "provisional.converse", m, "T is a provisional preorder ≡ T˘ is", {homo("T", "A")}, [](Inst x) {
    return is_provisional_preorder(x[0]) == is_provisional_preorder(converse(x[0])) ? holds()
                                                                                     : fails("asymmetric");
  });

  add(out, "provisional.division", m, "R>∘(R\\R) and (R/R)∘R< are provisional preorders",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        return Checks()
            .expect(is_provisional_preorder(compose(rdom(r), under(r, r))), "R>∘(R\\R)")
            .expect(is_provisional_preorder(compose(over(r, r), ldom(r))), "(R/R)∘R<")
            .outcome();
      });

  add(out, "provisional.left", m, "T is a provisional preorder ≡ T = T<∘(T\\T) = (T/T)∘T> = T<∘(T\\T/T)∘T>",
      {homo("T", "A")}, [](Inst x) {
        const Rel& t = x[0];
        const bool forms = t == compose(ldom(t), under(t, t)) && t == compose(over(t, t), rdom(t)) &&
                           t == compose(ldom(t), sandwich(t, t, t), rdom(t));
        return forms == is_provisional_preorder(t) ? holds() : fails("characterization");
      });

  add(out, "provisional.per-left", m, "T = T<per∘(T\\T) = (T/T)∘T>per = T<per∘(T\\T/T)∘T>per",
      {provisional_preorder("T", "A")}, [](Inst x) {
        const Rel& t = x[0];
        const Rel pl = per_ldom(t), pr = per_rdom(t);
        return Checks()
            .eq(t, compose(pl, under(t, t)), "T<per∘(T\\T)")
            .eq(t, compose(over(t, t), pr), "(T/T)∘T>per")
            .eq(t, compose(pl, sandwich(t, t, t), pr), "T<per∘(T\\T/T)∘T>per")
            .outcome();
      });

  add(out, "provisional.per-domain", m, "T<per = T∩T˘ = T>per", {provisional_preorder("T", "A")}, [](Inst x) {
    const Rel& t = x[0];
    const Rel sym = meet(t, converse(t));
    return Checks().eq(per_ldom(t), sym, "T<per").eq(per_rdom(t), sym, "T>per").outcome();
  });

  add(out, "provisional.ordering-domain", m, "T< = T∩T˘ = T> for a provisional ordering T",
      {provisional_ordering("T", "A")}, [](Inst x) {
        const Rel& t = x[0];
        const Rel sym = meet(t, converse(t));
        return Checks().eq(ldom(t), sym, "T<").eq(rdom(t), sym, "T>").outcome();
      });

  Law& pair = add(out, "pair.inf-preserving", m,
                  "R is represented by infima exactly when each of its fibers preserves all infima",
                  {any("R", "A", "B"),
                   {"O", "B", "B",
                    [](const Rel& o) { return is_partial_order(o) && is_complete_lattice(o); },
                    [](Generator& g, const Carrier& c, const Carrier&) { return g.lattice_order(c); }}},
                  [](Inst x) {
                    return represented_by_infimum(x[0], x[1]) == fibers_inf_preserving(x[0], x[1])
                               ? holds()
                               : fails("bullets disagree");
                  });
  pair.sample = [](Generator& gen, std::span<const Carrier> cs) {
    const Rel o = gen.lattice_order(cs[1]);
    if (gen.coin(0.5)) return std::vector<Rel>{gen.relation(cs[0], cs[1]), o};
    // a R b ≡ F.a ⊑ b for a random map F.
    std::vector<std::size_t> img(cs[0].size());
    for (auto& v : img) v = gen.uniform(0, cs[1].size() - 1);
    return std::vector<Rel>{Rel::tabulate(cs[0], cs[1], [&](std::size_t a, std::size_t b) { return o(img[a], b); }), o};
  };
  pair.min_size = 1;
  pair.max_size = 5;
}

}  // namespace relkit::laws
