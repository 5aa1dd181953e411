#include "laws/common.hpp"
#include "relkit/diagonal.hpp"
#include "relkit/order_analysis.hpp"
#include "relkit/residuals.hpp"

namespace relkit::laws {

void register_diagonal_laws(std::vector<Law>& out) {
  const std::string m = "diagonal";

  add(out, "diagonal.difunctional", m, "ΔR is difunctional, by all seven characterizations",
      {any("R", "A", "B")}, [](Inst x) {
        return difunctional_battery(diagonal(x[0])).all() ? holds() : fails("ΔR not difunctional");
      });

  add(out, "diagonal.converse", m, "Δ(R˘) = (ΔR)˘", {any("R", "A", "B")}, [](Inst x) {
    return Checks().eq(diagonal(converse(x[0])), converse(diagonal(x[0])), "Δ(R˘) = (ΔR)˘").outcome();
  });

  add(out, "diagonal.per-domain-division", m,
      "(ΔR)<per = (ΔR)<∘R<per = R<per∘(ΔR)<, and dually on the right", {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const Rel d = diagonal(r);
        const Rel pl = per_ldom(r), pr = per_rdom(r);
        const Rel dl = ldom(d), dr = rdom(d);
        return Checks()
            .eq(per_ldom(d), compose(dl, pl), "(ΔR)<per = (ΔR)<∘R<per")
            .eq(per_ldom(d), compose(pl, dl), "(ΔR)<per = R<per∘(ΔR)<")
            .eq(per_rdom(d), compose(pr, dr), "(ΔR)>per = R>per∘(ΔR)>")
            .eq(per_rdom(d), compose(dr, pr), "(ΔR)>per = (ΔR)>∘R>per")
            .outcome();
      });

  add(out, "diagonal.domain-iff-per-domain", m,
      "(ΔR)<per = R<per ≡ (ΔR)< = R<, and dually on the right", {any("R", "A", "B")}, [](Inst x) {
        const Rel& r = x[0];
        const Rel d = diagonal(r);
        return Checks()
            .expect((per_ldom(d) == per_ldom(r)) == (ldom(d) == ldom(r)), "left")
            .expect((per_rdom(d) == per_rdom(r)) == (rdom(d) == rdom(r)), "right")
            .outcome();
      });

  add(out, "diagonal.contained", m, "ΔR ⊆ R", {any("R", "A", "B")},
      [](Inst x) { return Checks().le(diagonal(x[0]), x[0], "ΔR ⊆ R").outcome(); });

  // Random instances are membership relations; exhaustive mode covers all
  // relations.
  add(out, "diagonal.injective-when-antisymmetric", m, "R\\R antisymmetric ⇒ ΔR injective",
      {{"R", "X", "S", {},
        [](Generator& g, const Carrier& x, const Carrier&) {
          const std::size_t cap = x.size() >= 5 ? 32 : (std::size_t{1} << x.size());
          return g.membership(x, g.uniform(1, cap));
        }}},
      [](Inst x) {
        const Rel u = under(x[0], x[0]);
        if (!leq(meet(u, converse(u)), id(u))) return vacuous();
        return is_injective(diagonal(x[0])) ? holds() : fails("ΔR not injective");
      });

  // The converse direction fails for non-transitive R; see dense_diag_check.
  add(out, "diagonal.dense-empty", m, "R ⊆ R∘R ∧ I∩R = ⊥ ⇒ ΔR = ⊥, and ΔR = ⊥ ≡ I∩R = ⊥ when R is also transitive",
      {dense("R", "A")}, [](Inst x) {
        const Rel& r = x[0];
        const bool irreflexive = meet(id(r), r).is_empty();
        if (irreflexive) return diagonal(r).is_empty() ? holds() : fails("ΔR ≠ ⊥ although I∩R = ⊥");
        if (!is_transitive(r)) return vacuous();
        const LawReport rep = dense_diag_check(r);
        return rep.passed ? holds() : fails("equivalence fails for transitive R");
      });
}

}  // namespace relkit::laws
