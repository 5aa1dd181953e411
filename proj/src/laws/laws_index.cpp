#include "laws/common.hpp"
#include "relkit/diagonal.hpp"
#include "relkit/index_core.hpp"

namespace relkit::laws {

void register_index_laws(std::vector<Law>& out) {
  const std::string m = "index-core";

  add(out, "index.choice", m, "every per has a coreflexive index J: J ⊆ P, P∘J∘P = P, J∘P∘J = J",
      {per("P", "A")}, [](Inst x) {
        const Rel& p = x[0];
        Checks c;
        for (TieBreak tie : {TieBreak::least, TieBreak::greatest}) {
          const Rel j = per_index(p, tie);
          c.expect(is_coreflexive(j), "coreflexive")
              .le(j, p, "J ⊆ P")
              .eq(compose(p, j, p), p, "P∘J∘P = P")
              .eq(compose(j, p, j), j, "J∘P∘J = J");
        }
        return c.outcome();
      });

  add(out, "core.domains", m, "R< = λ>, C< = λ<, R> = ρ>, C> = ρ<", {any("R", "A", "B")}, [](Inst x) {
    const Rel& r = x[0];
    const CoreWitness w = core_of(r);
    return Checks()
        .eq(ldom(r), rdom(w.lambda), "R< = λ>")
        .eq(ldom(w.core), ldom(w.lambda), "C< = λ<")
        .eq(rdom(r), rdom(w.rho), "R> = ρ>")
        .eq(rdom(w.core), ldom(w.rho), "C> = ρ<")
        .expect(core_violations(w, r).empty(), "witness conditions")
        .outcome();
  });

  add(out, "index.per-domain-regeneration", m, "R<per∘J<∘R<per = R<per and R>per∘J>∘R>per = R>per",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const Rel j = rel_index(r);
        const Rel pl = per_ldom(r), pr = per_rdom(r);
        return Checks()
            .eq(compose(pl, ldom(j), pl), pl, "left")
            .eq(compose(pr, rdom(j), pr), pr, "right")
            .outcome();
      });

  add(out, "core.diagonal", m, "ΔR = λ˘∘ΔC∘ρ and ΔC = λ∘ΔR∘ρ˘", {any("R", "A", "B")}, [](Inst x) {
    const Rel& r = x[0];
    const CoreWitness w = core_of(r);
    return Checks()
        .eq(diagonal(r), compose(converse(w.lambda), diagonal(w.core), w.rho), "ΔR = λ˘∘ΔC∘ρ")
        .eq(diagonal(w.core), compose(w.lambda, diagonal(r), converse(w.rho)), "ΔC = λ∘ΔR∘ρ˘")
        .outcome();
  });

  add(out, "index.diagonal-is-index", m, "Δ(J) is an index of ΔR for J an index of R", {any("R", "A", "B")},
      [](Inst x) {
        const Rel& r = x[0];
        Checks c;
        for (TieBreak tie : {TieBreak::least, TieBreak::greatest})
          c.expect(is_index(diagonal(rel_index(r, tie)), diagonal(r)), "ΔJ index of ΔR");
        return c.outcome();
      });

  add(out, "index.diagonal-restriction", m, "ΔJ = J<∘ΔR∘J> and ΔR = R<per∘ΔJ∘R>per", {any("R", "A", "B")},
      [](Inst x) {
        const Rel& r = x[0];
        const Rel j = rel_index(r);
        const Rel dj = diagonal(j), dr = diagonal(r);
        return Checks()
            .eq(dj, compose(ldom(j), dr, rdom(j)), "ΔJ = J<∘ΔR∘J>")
            .eq(dr, compose(per_ldom(r), dj, per_rdom(r)), "ΔR = R<per∘ΔJ∘R>per")
            .outcome();
      });

  add(out, "index.difunction-clauses", m, "indexes of difunctional relations satisfy the difunction clauses",
      {difunctional("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        Checks c;
        for (TieBreak tie : {TieBreak::least, TieBreak::greatest}) {
          const auto cl = difunction_index_clauses(rel_index(r, tie), r);
          c.expect(cl.a, "(a)").expect(cl.b, "(b)").expect(cl.c, "(c)").expect(cl.d, "(d)");
        }
        return c.outcome();
      });

  add(out, "iso.equivalence", m, "isomorphism of cores is reflexive, symmetric and transitive",
      {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const Rel c1 = core_of(r, TieBreak::least).core;
        const Rel c2 = core_of(r, TieBreak::greatest).core;
        const Rel c3 = core_of(c2, TieBreak::least).core;
        const IsoResult refl = are_isomorphic(c1, c1);
        const IsoResult i12 = are_isomorphic(c1, c2);
        const IsoResult i23 = are_isomorphic(c2, c3);
        Checks c;
        c.expect(refl.status == IsoStatus::found, "reflexive")
            .expect(i12.status == IsoStatus::found, "cores isomorphic")
            .expect(i23.status == IsoStatus::found, "core of core isomorphic");
        if (i12.status == IsoStatus::found) {
          c.expect(is_iso_witness(c1, c2, *i12.phi, *i12.psi), "witness")
              .expect(is_iso_witness(c2, c1, converse(*i12.phi), converse(*i12.psi)), "symmetric");
          if (i23.status == IsoStatus::found)
            c.expect(is_iso_witness(c1, c3, compose(*i12.phi, *i23.phi), compose(*i12.psi, *i23.psi)),
                     "transitive");
        }
        return c.outcome();
      });
}

}  // namespace relkit::laws
