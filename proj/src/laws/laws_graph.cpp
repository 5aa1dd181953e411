#include "laws/common.hpp"
#include "relkit/diagonal.hpp"
#include "relkit/graph_condense.hpp"
#include "relkit/index_core.hpp"
#include "relkit/order_analysis.hpp"

namespace relkit::laws {

void register_graph_laws(std::vector<Law>& out) {
  const std::string m = "graph-condense";

  const auto digraph = [](std::string name, const std::string& v) {
    LawParam p = homo(std::move(name), v);
    p.make = [](Generator& g, const Carrier& c, const Carrier&) { return g.digraph(c); };
    return p;
  };

  add(out, "scc.decomposition", m,
      "sc˘∘sc = Δ(G*), G* = sc˘∘A*∘sc, I ∩ A⁺ = ⊥, and the closure's block ordering matches its decomposition",
      {digraph("G", "N")}, [](Inst x) {
        const Rel& g = x[0];
        const CondensationResult c = condense(g);
        Checks chk;
        for (const auto& v : condensation_violations(c, g)) chk.expect(false, v.c_str());
        const auto viaclosure = block_order_of_closure(g);
        const auto direct = block_decompose(rtc(g));
        chk.expect(direct.has_value(), "G* block-ordered");
        if (direct) {
          // Throws unless both describe G*; φ must then be a bijection.
          chk.expect(is_bijection(representation_iso(viaclosure, *direct)), "representation iso");
        }
        return chk.outcome();
      });

  add(out, "scc.diagonal-equivalence", m, "Δ(G*) = G* ∩ G*˘ is an equivalence relation", {digraph("G", "N")},
      [](Inst x) {
        const Rel star = rtc(x[0]);
        const Rel d = diagonal(star);
        return Checks()
            .le(id(d), d, "reflexive")
            .expect(is_symmetric(d), "symmetric")
            .expect(is_transitive(d), "transitive")
            .eq(d, meet(star, converse(star)), "Δ(G*) = G* ∩ G*˘")
            .outcome();
      });

  add(out, "scc.idempotent", m, "condensing a condensation gives singleton components and an isomorphic graph",
      {digraph("G", "N")}, [](Inst x) {
        const CondensationResult c1 = condense(x[0]);
        const CondensationResult c2 = condense(c1.a);
        return Checks()
            .expect(is_bijection(c2.sc), "singleton components")
            .expect(are_isomorphic(c1.a, c2.a).status == IsoStatus::found, "isomorphic")
            .outcome();
      });
}

}  // namespace relkit::laws
